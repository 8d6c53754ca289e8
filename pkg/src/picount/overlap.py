"""Intersection algebra of the restricted progressions.

Two progressions with prime leading factors p = 2n1+1 < q = 2n2+1 share
exactly the odd multiples of p*q that are >= q^2, so their intersection is
itself an arithmetic progression: first common term p*q*c with c the
smallest odd multiplier >= max(3, q/p), common difference 2*p*q.  For k
progressions the same reasoning gives first term prod * c with c the
smallest odd value >= q_k^2 / prod (possibly 1) and common difference
2 * prod.  The closed forms below express c through a Heaviside-gated
ceiling of an exact rational; no floating point is involved anywhere.

:func:`lambda_c` turns those intersections into the inclusion-exclusion
correction: the number of times the per-row counts over-count odd
composites that sit in several progressions at once.  Subsets are walked
depth-first and abandoned as soon as the product of leading factors
exceeds the limit, since every common term is at least that product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, prod
from typing import Iterator, Sequence

from .restricted import RestrictedIndexSet

__all__ = [
    "InvariantViolation",
    "OverlapTerm",
    "common_difference",
    "heaviside",
    "lambda_c",
    "multi_first_common",
    "overlap_count",
    "overlap_terms",
    "pair_first_common",
]

HALF = Fraction(1, 2)


class InvariantViolation(RuntimeError):
    """A branch that is unreachable for prime leading factors was reached.

    The boundary cases of the closed forms (ratio exactly 3, square equal
    to the product) would need the Heaviside value 1/2, which cannot occur
    for distinct primes; hitting one means a precondition was violated.
    """


def heaviside(z: Fraction | int) -> Fraction | int:
    """Step function: 1 for z > 0, 1/2 at 0, 0 for z < 0 (exact)."""
    if z > 0:
        return 1
    if z < 0:
        return 0
    return HALF


def _validate_indices(indices: Sequence[int], minimum: int) -> None:
    if len(indices) < minimum:
        raise ValueError(f"need at least {minimum} indices, got {len(indices)}")
    prev = 0
    for n in indices:
        if n <= prev:
            raise ValueError(f"indices must be strictly increasing and >= 1: {indices}")
        prev = n


def pair_first_common(n1: int, n2: int) -> int:
    """Smallest integer common to rows n1 < n2 (prime leading factors).

    Computed as p*q * (3 + 2*ceil(Z)*H[Z]) with Z = (q/p - 3) / 2 in exact
    rational arithmetic: the multiplier is the smallest odd value >= q/p,
    never below 3 (p*q itself is smaller than q^2, hence never common).
    """
    _validate_indices((n1, n2), 2)
    p = 2 * n1 + 1
    q = 2 * n2 + 1
    z = (Fraction(q, p) - 3) / 2
    gate = heaviside(z)
    if gate == HALF:
        raise InvariantViolation(
            f"ratio {q}/{p} is exactly 3; leading factors are not distinct primes"
        )
    return p * q * (3 + 2 * ceil(z) * gate)


def multi_first_common(indices: Sequence[int]) -> int:
    """Smallest integer common to k >= 3 rows with prime leading factors.

    prod * (1 + 2*ceil(Q)*H[Q]) with Q = (q_k^2 / prod - 1) / 2, where
    q_k is the largest leading factor: the multiplier is the smallest odd
    value >= q_k^2 / prod, which degenerates to 1 once the product alone
    clears the square.
    """
    _validate_indices(indices, 3)
    factors = [2 * n + 1 for n in indices]
    product = prod(factors)
    top = factors[-1]
    q = (Fraction(top * top, product) - 1) / 2
    gate = heaviside(q)
    if gate == HALF:
        raise InvariantViolation(
            f"square of {top} equals the product {product}; "
            "leading factors are not distinct primes"
        )
    return product * (1 + 2 * ceil(q) * gate)


def common_difference(indices: Sequence[int]) -> int:
    """Period of the intersection of k >= 2 rows: 2 * prod(2n+1)."""
    _validate_indices(indices, 2)
    return 2 * prod(2 * n + 1 for n in indices)


def overlap_count(indices: Sequence[int], limit: int) -> int:
    """How many integers <= limit are common to all the given rows.

    floor((limit - first) / period) + 1 once the first common term is
    within range, else 0.  The boundary counts: a common term landing
    exactly on ``limit`` is a real duplicate and must be corrected for.
    """
    if len(indices) == 2:
        first = pair_first_common(indices[0], indices[1])
    else:
        first = multi_first_common(indices)
    if first > limit:
        return 0
    return (limit - first) // common_difference(indices) + 1


@dataclass(frozen=True, slots=True)
class OverlapTerm:
    """One subset of restricted rows with its intersection data.

    ``sign`` is the inclusion-exclusion weight: +1 for even subset sizes,
    -1 for odd.
    """

    indices: tuple[int, ...]
    first_term: int
    common_diff: int
    sign: int

    def count_upto(self, limit: int) -> int:
        if self.first_term > limit:
            return 0
        return (limit - self.first_term) // self.common_diff + 1


def overlap_terms(
    restricted: RestrictedIndexSet, limit: int | None = None
) -> Iterator[OverlapTerm]:
    """Every subset of >= 2 restricted rows that can intersect below ``limit``.

    Yields subsets in depth-first lexicographic order, pruning a branch as
    soon as the product of leading factors exceeds ``limit`` (every common
    term of a subset is at least that product, and supersets only grow it).
    ``limit`` defaults to the limit the restricted set was built for.
    """
    lim = restricted.limit if limit is None else limit
    idx = restricted.indices
    m = len(idx)

    def extend(chosen: tuple[int, ...], product: int, start: int) -> Iterator[OverlapTerm]:
        for j in range(start, m):
            n = idx[j]
            grown = product * (2 * n + 1)
            if grown > lim:
                break
            subset = chosen + (n,)
            k = len(subset)
            if k >= 2:
                if k == 2:
                    first = pair_first_common(subset[0], subset[1])
                else:
                    first = multi_first_common(subset)
                yield OverlapTerm(
                    indices=subset,
                    first_term=first,
                    common_diff=2 * grown,
                    sign=1 if k % 2 == 0 else -1,
                )
            yield from extend(subset, grown, j + 1)

    return extend((), 1, 0)


def lambda_c(limit: int, restricted: RestrictedIndexSet) -> int:
    """Inclusion-exclusion correction: duplicates among the per-row counts.

    Sums, over every subset of >= 2 restricted rows, the signed number of
    common terms <= limit (positive for even subset sizes, negative for
    odd).  Subtracting the result from the raw per-row sum leaves each odd
    composite counted exactly once.

    This is the hot path of the whole counter, so the subset walk is an
    explicit-stack loop on plain integers; the multiplier c of the first
    common term prod * c is the smallest odd value >= q^2 / prod (q the
    largest leading factor), obtained by an odd-rounded ceiling division.
    For pairs that simplifies to the smallest odd value >= q/p, which is
    automatically >= 3.  Equivalence with the rational closed forms used
    by :func:`overlap_terms` is pinned by the test suite.
    """
    if restricted.limit != limit:
        raise ValueError(
            f"restricted set was built for limit {restricted.limit}, not {limit}"
        )
    ps = [2 * n + 1 for n in restricted.indices]
    m = len(ps)
    total = 0
    stack: list[tuple[int, int, int]] = []
    push = stack.append
    pop = stack.pop
    for i in range(m - 1):
        p = ps[i]
        if p * ps[i + 1] > limit:
            break
        for j in range(i + 1, m):
            q = ps[j]
            pq = p * q
            if pq > limit:
                break
            c = -(-q // p)
            if not c & 1:
                c += 1
            t = pq * c
            if t <= limit:
                total += (limit - t) // (pq + pq) + 1
            if j + 1 < m and pq * ps[j + 1] <= limit:
                push((j + 1, pq, -1))
        while stack:
            start, product, sign = pop()
            for j in range(start, m):
                q = ps[j]
                grown = product * q
                if grown > limit:
                    break
                c = -(-(q * q) // grown)
                if not c & 1:
                    c += 1
                t = grown * c
                if t <= limit:
                    total += sign * ((limit - t) // (grown + grown) + 1)
                if j + 1 < m and grown * ps[j + 1] <= limit:
                    push((j + 1, grown, -sign))
    return total
