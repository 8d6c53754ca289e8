"""Assembly of the prime counter from the composite counts.

Among 1 .. N every number is exactly one of: unity, a prime, an even
composite, or an odd composite.  The even composites number
floor(N/2 - 1); the odd composites are counted by summing the per-row
progression counts over the restricted indices and subtracting the
inclusion-exclusion correction.  What remains is the number of primes:

    pi(N) = N - even_composites - odd_composites - 1.

:func:`breakdown` exposes every intermediate of one evaluation so a
result can be audited line by line.  Nothing is cached; every call
recomputes from scratch and is safe to run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .overlap import lambda_c
from .progressions import ap_count
from .restricted import RestrictedIndexSet, sieve_restricted

__all__ = [
    "PiBreakdown",
    "breakdown",
    "even_composite_count",
    "odd_composite_count",
    "prime_pi",
    "raw_odd_sum",
]


def even_composite_count(limit: int) -> int:
    """Even composites <= limit: floor(limit/2 - 1), never negative."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    return max(0, limit // 2 - 1)


def raw_odd_sum(limit: int, restricted: RestrictedIndexSet) -> int:
    """Sum of per-row term counts over the restricted indices.

    Counts every odd composite <= limit at least once; composites lying
    in several rows are counted once per row, which lambda_c corrects.
    """
    if restricted.limit != limit:
        raise ValueError(
            f"restricted set was built for limit {restricted.limit}, not {limit}"
        )
    return sum(ap_count(n, limit) for n in restricted.indices)


def odd_composite_count(limit: int) -> int:
    """Exact number of odd composites <= limit."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    restricted = sieve_restricted(limit)
    return raw_odd_sum(limit, restricted) - lambda_c(limit, restricted)


def prime_pi(n: int) -> int:
    """Number of primes <= n.

    n = 0 and n = 1 return 0 by convention (unity is neither prime nor
    composite); negative input is an error.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n < 2:
        return 0
    restricted = sieve_restricted(n)
    odd = raw_odd_sum(n, restricted) - lambda_c(n, restricted)
    return n - even_composite_count(n) - odd - 1


@dataclass(frozen=True, slots=True)
class PiBreakdown:
    """Full trace of one evaluation of the prime counter.

    Invariants: pi = n - even_composites - odd_composites - 1 and
    odd_composites = raw_odd_sum - lambda_c, with every count >= 0.
    """

    n: int
    even_composites: int
    raw_odd_sum: int
    lambda_c: int
    odd_composites: int
    pi: int
    restricted_indices: tuple[int, ...]


def breakdown(n: int) -> PiBreakdown:
    """Evaluate the counter at n >= 2, keeping every intermediate."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    restricted = sieve_restricted(n)
    even = even_composite_count(n)
    raw = raw_odd_sum(n, restricted)
    correction = lambda_c(n, restricted)
    odd = raw - correction
    return PiBreakdown(
        n=n,
        even_composites=even,
        raw_odd_sum=raw,
        lambda_c=correction,
        odd_composites=odd,
        pi=n - even - odd - 1,
        restricted_indices=restricted.indices,
    )
