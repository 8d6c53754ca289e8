"""The restricted set of row indices with prime leading factor.

A row of composite leading factor 2n + 1 only repeats terms that already
appear in the row of its least prime factor, so the counting pipeline
keeps exactly the indices n with 2n + 1 prime.  The rejection rule is
self-contained: index n is rejected when 2n + 1 itself occurs as a term
of some progression, i.e. when 2n + 1 is an odd composite.  The sieve
below applies that rule by walking the progressions themselves.

:func:`wilson_is_prime` is an independent way to settle the same
primality question ((p-1)! = -1 mod p); it is deliberately kept behind a
size cap because the modular factorial costs O(p) work per call.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .progressions import n_max

__all__ = [
    "WILSON_CAP",
    "RestrictedIndexSet",
    "is_ap_representable",
    "sieve_restricted",
    "wilson_is_prime",
]

WILSON_CAP = 10**6


@dataclass(frozen=True, slots=True)
class RestrictedIndexSet:
    """Row indices n <= n_max(limit) whose leading factor 2n+1 is prime."""

    limit: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.limit < 2:
            raise ValueError(f"limit must be >= 2, got {self.limit}")
        bound = n_max(self.limit)
        prev = 0
        for n in self.indices:
            if n <= prev:
                raise ValueError("indices must be strictly increasing and >= 1")
            if n > bound:
                raise ValueError(f"index {n} exceeds n_max({self.limit}) = {bound}")
            prev = n

    def primes(self) -> tuple[int, ...]:
        """The prime leading factors 2n+1, in ascending order."""
        return tuple(2 * n + 1 for n in self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, n: object) -> bool:
        return n in self.indices


def sieve_restricted(limit: int) -> RestrictedIndexSet:
    """All row indices n in [1, n_max(limit)] with 2n+1 prime.

    Walks each progression over the odd values 3 .. 2*n_max+1 and discards
    every index n whose 2n+1 shows up as a term.  Only progressions
    starting at or below 2*n_max+1 can mark anything, and rows already
    marked composite are skipped since their terms duplicate the row of a
    smaller prime factor.
    """
    bound = n_max(limit)  # validates limit >= 2
    # marked[n] = 1 once 2n+1 is seen as a progression term (odd composite).
    marked = bytearray(bound + 1)
    top_odd = 2 * bound + 1
    for n in range(1, (isqrt(top_odd) - 1) // 2 + 1):
        if marked[n]:
            continue
        odd = 2 * n + 1
        # term v = odd^2 + 2k*odd maps to index (v-1)//2 = start + k*odd.
        start = (odd * odd - 1) // 2
        if start <= bound:
            marked[start::odd] = b"\x01" * ((bound - start) // odd + 1)
    indices = tuple(n for n in range(1, bound + 1) if not marked[n])
    return RestrictedIndexSet(limit=limit, indices=indices)


def wilson_is_prime(p: int, *, cap: int = WILSON_CAP) -> bool:
    """Primality of p via (p-1)! = -1 (mod p), by modular accumulation.

    O(p) multiplications, so calls above ``cap`` raise instead of silently
    taking forever; use the sieve path for anything large.  p = 2 is prime
    under this rule too: 1! = 1 = -1 (mod 2).
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if p > cap:
        raise ValueError(f"p = {p} exceeds the Wilson cap {cap}")
    acc = 1
    for k in range(2, p):
        acc = acc * k % p
    return acc == p - 1


def is_ap_representable(m: int) -> bool:
    """Whether odd m >= 3 occurs as a progression term, i.e. is composite.

    m is a term of row n exactly when m = (2n+1) * q with q odd and
    q >= 2n+1, so it suffices to walk the rows whose start does not exceed
    m and test divisibility by the leading factor.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be an odd integer >= 3, got {m}")
    odd = 3
    while odd * odd <= m:
        if m % odd == 0:
            return True
        odd += 2
    return False
