"""Independent sieve-based references used only for verification.

Everything here is deliberately built on a different algorithmic basis
than the counting pipeline (Eratosthenes marking, direct membership
walks) and shares no code with it, so agreement between the two is
meaningful evidence rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

import numpy as np

__all__ = [
    "SIEVE_CAP",
    "OracleTables",
    "ap_intersection_bruteforce",
    "oracle_odd_composites",
    "sieve_pi",
    "sieve_primes",
]

SIEVE_CAP = 10**8


@dataclass(frozen=True, eq=False)
class OracleTables:
    """Primality flags and cumulative prime counts over [0, limit]."""

    limit: int
    prime_flags: bytes
    cumulative_pi: np.ndarray

    def is_prime(self, n: int) -> bool:
        self._check(n)
        return bool(self.prime_flags[n])

    def pi(self, n: int) -> int:
        self._check(n)
        return int(self.cumulative_pi[n])

    def primes(self) -> list[int]:
        return [n for n in range(self.limit + 1) if self.prime_flags[n]]

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.limit:
            raise ValueError(f"n = {n} outside table range [0, {self.limit}]")


def sieve_primes(limit: int, *, cap: int = SIEVE_CAP) -> OracleTables:
    """Classic Eratosthenes marking up to ``limit`` (inclusive)."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit > cap:
        raise ValueError(f"limit {limit} exceeds the sieve cap {cap}")
    flags = bytearray([1]) * (limit + 1)
    flags[: min(2, limit + 1)] = b"\x00" * min(2, limit + 1)
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(range(i * i, limit + 1, i))
    cumulative = np.cumsum(np.frombuffer(bytes(flags), dtype=np.uint8), dtype=np.int64)
    cumulative.flags.writeable = False
    return OracleTables(limit=limit, prime_flags=bytes(flags), cumulative_pi=cumulative)


def sieve_pi(n: int, *, cap: int = SIEVE_CAP) -> int:
    """Number of primes <= n, straight from a fresh sieve."""
    return sieve_primes(n, cap=cap).pi(n)


def oracle_odd_composites(limit: int, *, cap: int = SIEVE_CAP) -> int:
    """Count of odd m in [9, limit] that the sieve marks non-prime."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    tables = sieve_primes(limit, cap=cap)
    flags = np.frombuffer(tables.prime_flags, dtype=np.uint8)
    return int(np.count_nonzero(flags[9 : limit + 1 : 2] == 0))


def _is_member(value: int, n: int) -> bool:
    # value belongs to row n iff it is a term (2n+1)^2 + 2k(2n+1), k >= 0
    odd = 2 * n + 1
    start = odd * odd
    return value >= start and (value - start) % (2 * odd) == 0


def ap_intersection_bruteforce(indices: Sequence[int], limit: int) -> list[int]:
    """Every integer <= limit common to all the listed rows, by walking.

    Walks the sparsest row (the last, indices being ascending) and tests
    membership in each of the others directly.
    """
    if not indices:
        raise ValueError("need at least one row index")
    prev = 0
    for n in indices:
        if n <= prev:
            raise ValueError(f"indices must be strictly increasing and >= 1: {indices}")
        prev = n
    top = indices[-1]
    rest = indices[:-1]
    odd = 2 * top + 1
    common = []
    value = odd * odd
    while value <= limit:
        if all(_is_member(value, n) for n in rest):
            common.append(value)
        value += 2 * odd
    return common
