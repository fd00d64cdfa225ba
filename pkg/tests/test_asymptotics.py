"""Ordered factorizations, polylogarithms, and the expected-generators limit."""

import math

import numpy as np
import pytest

from randmono.asymptotics import (
    beta1_limit_bounds,
    expected_beta1_2vars_lambert,
    expected_beta1_limit,
    polylog_neg,
    stirling2,
    tau,
    tau_table,
)


def brute_tau(r, k):
    """Ordered factorizations of k into exactly r parts, counted directly."""
    if r == 0:
        return 1 if k == 1 else 0
    total = 0
    for d in range(1, k + 1):
        if k % d == 0:
            total += brute_tau(r - 1, k // d)
    return total


# ---------------------------------------------------------------------------
# counting functions

def test_tau_known_values():
    assert tau(3, 4) == 6  # 4=4*1*1, 1*4*1, 1*1*4, 2*2*1, 2*1*2, 1*2*2
    assert tau(2, 12) == 6  # divisor count of 12
    assert tau(1, 9) == 1
    assert tau(4, 1) == 1


def test_tau_against_direct_enumeration():
    for r in range(1, 5):
        for k in range(1, 40):
            assert tau(r, k) == brute_tau(r, k), (r, k)


def test_tau_table_matches_pointwise():
    for r in (2, 3, 4):
        table = tau_table(r, 200)
        for k in range(1, 201):
            assert table[k] == tau(r, k), (r, k)


def test_tau_growth_envelope():
    # r <= tau_r(k) <= k^r for k >= 2, which drives the tail bound
    for r in (2, 3, 4):
        for k in range(2, 60):
            assert r <= tau(r, k) <= k**r


def test_stirling_triangle():
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(3, 3) == 1
    assert stirling2(3, 0) == 0
    # row sums are the Bell numbers
    assert sum(stirling2(4, k) for k in range(5)) == 15


# ---------------------------------------------------------------------------
# polylogarithm

def test_polylog_order_one_closed_form():
    # Li_{-1}(x) = x/(1-x)^2
    assert polylog_neg(1, 0.5) == pytest.approx(2.0, abs=1e-12)
    x = 0.3
    assert polylog_neg(1, x) == pytest.approx(x / (1 - x) ** 2, abs=1e-12)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
def test_polylog_matches_direct_series(order, x):
    # sum k^n x^k, truncated far past float precision
    ks = np.arange(1, 3000, dtype=np.float64)
    direct = float(np.sum(ks**order * x**ks))
    assert polylog_neg(order, x) == pytest.approx(direct, abs=1e-9)


# ---------------------------------------------------------------------------
# the expected number of minimal generators, D -> infinity

def test_limit_value_is_about_twelve_for_tiny_p():
    sv = expected_beta1_limit(2, 1e-5, eps=1e-6)
    assert 11 <= sv.value <= 13
    assert sv.tail_bound <= 1e-6


def test_series_and_lambert_agree():
    for p in (0.1, 0.01):
        series = expected_beta1_limit(2, p, eps=1e-12)
        lambert = expected_beta1_2vars_lambert(p, eps=1e-12)
        assert abs(series.value - lambert.value) < 1e-9


def test_limit_near_one_degenerates_to_single_generator():
    # at p close to 1 the ideal is almost surely maximal in one variable
    sv = expected_beta1_limit(1, 0.99, eps=1e-12)
    assert sv.value == pytest.approx(1.0, abs=0.1)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("p", [0.5, 0.1, 0.01])
def test_sandwich_bounds_hold(n, p):
    lo, hi = beta1_limit_bounds(n, p)
    sv = expected_beta1_limit(n, p, eps=1e-9)
    assert lo <= sv.value <= hi
    assert lo == n  # the trivial lower bound
    # the upper bound is the polylog comparison series
    assert hi == pytest.approx(p / (1 - p) ** 2 * polylog_neg(n, 1 - p), rel=1e-12)


def test_series_reports_its_truncation():
    sv = expected_beta1_limit(3, 0.2, eps=1e-9)
    assert sv.terms >= 1
    assert sv.tail_bound <= 1e-9


def test_rejects_degenerate_p():
    with pytest.raises(ValueError):
        expected_beta1_limit(2, 0.0)
    with pytest.raises(ValueError):
        expected_beta1_limit(2, 1.0)
