"""Assembly of pi(N): component counts, breakdown trace, oracle agreement."""

import pytest

from picount.counting import (
    breakdown,
    even_composite_count,
    odd_composite_count,
    prime_pi,
    raw_odd_sum,
)
from picount.restricted import sieve_restricted


def test_even_composite_count_examples():
    assert even_composite_count(100) == 49
    assert even_composite_count(2) == 0
    assert even_composite_count(3) == 0
    assert even_composite_count(10) == 4  # 4, 6, 8, 10
    with pytest.raises(ValueError):
        even_composite_count(1)


def test_even_composite_count_by_enumeration():
    for limit in range(2, 500):
        direct = sum(1 for m in range(4, limit + 1, 2))
        assert even_composite_count(limit) == direct


def test_raw_odd_sum_examples():
    assert raw_odd_sum(100, sieve_restricted(100)) == 28  # 16 + 8 + 4
    assert raw_odd_sum(10, sieve_restricted(10)) == 1
    assert raw_odd_sum(8, sieve_restricted(8)) == 0
    with pytest.raises(ValueError):
        raw_odd_sum(100, sieve_restricted(50))


def test_odd_composite_count_examples():
    assert odd_composite_count(100) == 25
    assert odd_composite_count(10) == 1
    assert odd_composite_count(45) == 9
    # direct enumeration for the 45 case
    odd_composites = [
        m
        for m in range(9, 46, 2)
        if any(m % d == 0 for d in range(3, m) if d * d <= m)
    ]
    assert odd_composites == [9, 15, 21, 25, 27, 33, 35, 39, 45]


def test_prime_pi_examples():
    assert prime_pi(10) == 4
    assert prime_pi(100) == 25
    assert prime_pi(1000) == 168
    assert prime_pi(0) == 0
    assert prime_pi(1) == 0
    assert prime_pi(2) == 1
    with pytest.raises(ValueError):
        prime_pi(-1)


def test_breakdown_worked_example():
    trace = breakdown(100)
    assert trace.even_composites == 49
    assert trace.raw_odd_sum == 28
    assert trace.lambda_c == 3
    assert trace.odd_composites == 25
    assert trace.pi == 25
    assert trace.restricted_indices == (1, 2, 3)


def test_breakdown_edge_and_derived_cases():
    trace = breakdown(2)
    assert trace.even_composites == 0
    assert trace.raw_odd_sum == 0
    assert trace.lambda_c == 0
    assert trace.odd_composites == 0
    assert trace.pi == 1

    trace = breakdown(45)
    assert trace.even_composites == 21
    assert trace.raw_odd_sum == 10
    assert trace.lambda_c == 1
    assert trace.odd_composites == 9
    assert trace.pi == 14

    with pytest.raises(ValueError):
        breakdown(1)


def test_breakdown_invariants_sampled():
    for n in [2, 3, 9, 45, 100, 1234, 4321, 9999]:
        trace = breakdown(n)
        assert trace.pi == trace.n - trace.even_composites - trace.odd_composites - 1
        assert trace.odd_composites == trace.raw_odd_sum - trace.lambda_c
        assert trace.pi >= 0
        assert trace.odd_composites >= 0
        assert trace.even_composites >= 0
        assert trace.pi == prime_pi(n)


def test_partition_of_the_first_n_integers(tables_1e4):
    # primes, even composites, odd composites and unity tile [1, N]
    for n in range(2, 10_001, 7):
        assert prime_pi(n) + even_composite_count(n) + odd_composite_count(n) + 1 == n


def test_step_property_and_monotonicity(tables_1e4):
    previous = prime_pi(1)
    for n in range(2, 10_001):
        current = prime_pi(n)
        step = current - previous
        assert step in (0, 1)
        assert (step == 1) == tables_1e4.is_prime(n)
        previous = current
