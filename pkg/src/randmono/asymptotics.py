"""Large-degree-cap behaviour of the expected number of minimal generators.

As the degree cap grows with p fixed, E[number of minimal generators] tends to

    p * sum_{k >= 0} tau_n(k + 2) * (1 - p)^k,

where tau_n(k) counts ordered factorizations of k into n positive factors.
Truncations carry an explicit tail bound so callers can trust the precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np


@lru_cache(maxsize=None)
def tau(r: int, k: int) -> int:
    """Ordered factorizations of k into r positive integer factors."""
    if r < 1 or k < 1:
        raise ValueError("need r >= 1 and k >= 1")
    if r == 1:
        return 1
    return sum(tau(r - 1, d) for d in range(1, k + 1) if k % d == 0)


def tau_table(r: int, limit: int) -> np.ndarray:
    """tau_r(k) for k = 0..limit (index 0 unused, set to 0)."""
    if r < 1 or limit < 1:
        raise ValueError("need r >= 1 and limit >= 1")
    if r == 1:
        out = np.ones(limit + 1, dtype=np.int64)
        out[0] = 0
        return out
    if r == 2:
        # divisor counting via the sqrt trick keeps the Python loop short
        out = np.zeros(limit + 1, dtype=np.int64)
        for i in range(1, math.isqrt(limit) + 1):
            out[i * i] += 1
            if i * (i + 1) <= limit:
                out[i * (i + 1) :: i] += 2
        return out
    prev = tau_table(r - 1, limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    for i in range(1, limit + 1):
        out[i::i] += prev[i]
    return out


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind."""
    if m < 0 or k < 0:
        raise ValueError("need m, k >= 0")
    if m == k:
        return 1
    if k == 0 or k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


def polylog_neg(order: int, x: float) -> float:
    """Li_{-order}(x) = sum_{k>=1} k^order x^k as a rational function of x.

    Uses the finite Stirling-number expansion; exact up to rounding for
    0 <= x < 1 and integer order >= 0.
    """
    if not 0 <= x < 1:
        raise ValueError("need 0 <= x < 1")
    if order < 0:
        raise ValueError("order must be a non-negative integer")
    ratio = x / (1 - x)
    return float(
        sum(
            math.factorial(j) * stirling2(order + 1, j + 1) * ratio ** (j + 1)
            for j in range(order + 1)
        )
    )


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series value with a rigorous bound on the discarded tail."""

    value: float
    tail_bound: float
    terms: int


def _series_tail_bound(n: int, q: float, start: int) -> float:
    """Bound on sum_{k >= start} (k+2)^n q^k, valid once q*e^{n/(start+2)} < 1.

    Dominates tau_n(k+2) <= (k+2)^n and compares the remaining terms with a
    geometric series.
    """
    growth = q * math.exp(n / (start + 2))
    if growth >= 1:
        return math.inf
    return (start + 2) ** n * q ** start / (1 - growth)


def expected_beta1_limit(n: int, p: float, eps: float = 1e-6) -> SeriesValue:
    """Limiting expected minimal generator count, truncated to tail <= eps."""
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0 < p < 1:
        raise ValueError("need 0 < p < 1")
    if eps <= 0:
        raise ValueError("need eps > 0")
    q = 1.0 - p
    K = 1024
    while p * _series_tail_bound(n, q, K) > eps:
        K *= 2
        if K > 1 << 26:
            raise RuntimeError("series truncation point is unreasonably large")
    table = tau_table(n, K + 2).astype(np.float64)
    ks = np.arange(K, dtype=np.float64)
    terms = table[2 : K + 2] * np.power(q, ks)
    value = p * float(math.fsum(terms.tolist()))
    return SeriesValue(value, p * _series_tail_bound(n, q, K), K)


def expected_beta1_2vars_lambert(p: float, eps: float = 1e-9) -> SeriesValue:
    """Two-variable limit via the Lambert-type series sum_k q^k / (1 - q^k)."""
    if not 0 < p < 1:
        raise ValueError("need 0 < p < 1")
    q = 1.0 - p
    prefactor = p / q ** 2
    # each term q^k/(1-q^k) <= q^k/(1-q), so the discarded tail is geometric
    K = 1024
    while prefactor * (q ** (K + 1)) / ((1 - q) * (1 - q)) > eps:
        K *= 2
        if K > 1 << 26:
            raise RuntimeError("series truncation point is unreasonably large")
    ks = np.arange(1, K + 1, dtype=np.float64)
    qk = np.power(q, ks)
    terms = qk / (1.0 - qk)
    value = prefactor * float(math.fsum(terms.tolist())) - p / (1.0 - p)
    tail = prefactor * (q ** (K + 1)) / ((1 - q) * (1 - q))
    return SeriesValue(value, tail, K)


def beta1_limit_bounds(n: int, p: float) -> Tuple[float, float]:
    """Sandwich for the limit: n below, p(1-p)^{-2} Li_{-n}(1-p) above."""
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0 < p < 1:
        raise ValueError("need 0 < p < 1")
    upper = p * (1.0 - p) ** (-2) * polylog_neg(n, 1.0 - p)
    return float(n), upper
