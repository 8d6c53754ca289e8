"""Exact prime counting by counting odd composites along progressions.

The counter splits 1 .. N into unity, primes, even composites and odd
composites, counts the last two exactly, and reads pi(N) off the
remainder.  Odd composites are enumerated by the arithmetic progressions
rooted at odd squares; rows with prime leading factors are kept, and an
inclusion-exclusion correction removes composites hit by several rows.

The :mod:`picount.oracle` submodule holds independent sieve-based
references used by the test suite; the ``picount`` command line exposes
computation, tracing, verification sweeps and benchmarking.
"""

from .counting import (
    PiBreakdown,
    breakdown,
    even_composite_count,
    odd_composite_count,
    prime_pi,
    raw_odd_sum,
)
from .overlap import (
    InvariantViolation,
    OverlapTerm,
    common_difference,
    heaviside,
    lambda_c,
    multi_first_common,
    overlap_count,
    overlap_terms,
    pair_first_common,
)
from .progressions import ApSpec, ap_count, ap_term, isqrt, n_max
from .restricted import (
    WILSON_CAP,
    RestrictedIndexSet,
    is_ap_representable,
    sieve_restricted,
    wilson_is_prime,
)

__version__ = "0.1.0"

__all__ = [
    "ApSpec",
    "InvariantViolation",
    "OverlapTerm",
    "PiBreakdown",
    "RestrictedIndexSet",
    "WILSON_CAP",
    "ap_count",
    "ap_term",
    "breakdown",
    "common_difference",
    "even_composite_count",
    "heaviside",
    "is_ap_representable",
    "isqrt",
    "lambda_c",
    "multi_first_common",
    "n_max",
    "odd_composite_count",
    "overlap_count",
    "overlap_terms",
    "pair_first_common",
    "prime_pi",
    "raw_odd_sum",
    "sieve_restricted",
    "wilson_is_prime",
]
