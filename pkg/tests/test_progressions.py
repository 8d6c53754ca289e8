"""Progression generator: term formula, bounds, counts, coverage."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from picount.progressions import ApSpec, ap_count, ap_term, isqrt, n_max


def test_isqrt_examples():
    assert isqrt(100) == 10
    assert isqrt(99) == 9
    assert isqrt(0) == 0


@given(st.integers(0, 10**30))
def test_isqrt_floor_property(n):
    s = isqrt(n)
    assert s * s <= n < (s + 1) * (s + 1)


def test_ap_term_table_values():
    # rows of the odd multiplication table: 3*3, 5*9, 7*9
    assert ap_term(1, 1) == 9
    assert ap_term(2, 3) == 45
    assert ap_term(3, 2) == 63


def test_ap_term_rejects_bad_indices():
    with pytest.raises(ValueError):
        ap_term(0, 1)
    with pytest.raises(ValueError):
        ap_term(1, 0)


def test_ap_term_two_forms_agree_on_grid():
    for n in range(1, 51):
        for r in range(1, 51):
            assert ap_term(n, r) == (2 * n + r) ** 2 - (r - 1) ** 2


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_ap_term_two_forms_agree(n, r):
    assert ap_term(n, r) == (2 * n + r) ** 2 - (r - 1) ** 2


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_ap_term_step(n, r):
    assert ap_term(n, r + 1) - ap_term(n, r) == 2 * (2 * n + 1)


def test_ap_term_values_are_odd_composites():
    for n in range(1, 20):
        odd = 2 * n + 1
        for r in range(1, 20):
            value = ap_term(n, r)
            assert value % 2 == 1
            assert value % odd == 0 and value // odd >= 3


def test_n_max_examples():
    assert n_max(100) == 4
    assert n_max(9) == 1
    assert n_max(8) == 0
    with pytest.raises(ValueError):
        n_max(1)


def test_n_max_boundary_rows():
    # row n_max starts at or below the limit, row n_max + 1 does not
    for limit in [9, 10, 24, 25, 26, 120, 121, 122, 10_000, 10_001]:
        bound = n_max(limit)
        if bound >= 1:
            assert (2 * bound + 1) ** 2 <= limit
        assert (2 * (bound + 1) + 1) ** 2 > limit


def test_ap_count_examples():
    assert ap_count(1, 100) == 16
    assert ap_count(2, 100) == 8
    assert ap_count(1, 8) == 0
    with pytest.raises(ValueError):
        ap_count(0, 100)


@given(st.integers(1, 40), st.integers(2, 5000))
def test_ap_count_matches_walk(n, limit):
    count = 0
    r = 1
    while ap_term(n, r) <= limit:
        count += 1
        r += 1
    assert ap_count(n, limit) == count


def test_coverage_by_prime_rows_small(tables_1e4):
    # every odd composite c is a term of the row of its least prime factor
    for c in range(9, 10_001, 2):
        if tables_1e4.is_prime(c):
            continue
        p = 3
        while c % p:
            p += 2
        n = (p - 1) // 2
        assert p * p <= c
        r = (c // p - p) // 2 + 1
        assert ap_term(n, r) == c


def test_apspec_fields_and_delegates():
    spec = ApSpec.from_index(3)
    assert spec.first_term == 49
    assert spec.step == 14
    assert spec.first_term % (2 * spec.n + 1) == 0
    root = isqrt(spec.first_term)
    assert root * root == spec.first_term and root % 2 == 1
    assert spec.term(2) == 63
    assert spec.count_upto(100) == 4


def test_apspec_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        ApSpec(n=2, first_term=24, step=10)
    with pytest.raises(ValueError):
        ApSpec(n=0, first_term=1, step=2)
    with pytest.raises(ValueError):
        ApSpec.from_index(0)
