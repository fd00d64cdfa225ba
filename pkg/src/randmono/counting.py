"""Counting monomial ideals with prescribed Hilbert data.

Everything here is exhaustive at desk scale: censuses enumerate all monomial
ideals generated in degree <= D, and nmon() counts 0-1 ideal indicators by
backtracking degree by degree.  Guards keep the monomial count M <= 25.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .core import (
    GuardError,
    Monomial,
    MonomialIdeal,
    count_monomials_exact,
    count_monomials_up_to,
    divides,
    grlex_key,
    minimalize,
    monomials_of_degree,
)
from .exact import ERParams

CENSUS_GUARD = 25


class UnattainableHilbertError(ValueError):
    """The requested Hilbert vector is not realized by any monomial ideal."""


@dataclass(frozen=True)
class IdealCensus:
    """Every monomial ideal of k[x_1..x_n] generated in degrees 1..D."""

    n: int
    D: int
    ideals: tuple

    def by_hilbert(self) -> Dict[tuple, List[MonomialIdeal]]:
        out: Dict[tuple, List[MonomialIdeal]] = {}
        for I in self.ideals:
            out.setdefault(I.hilbert_vector(self.D), []).append(I)
        return out

    def count_hilbert_betti(self, h: tuple, beta: tuple) -> int:
        return sum(
            1
            for I in self.ideals
            if I.hilbert_vector(self.D) == h and I.graded_betti1(self.D) == beta
        )


def enumerate_monomial_ideals(n: int, D: int) -> IdealCensus:
    """Enumerate all antichains of the divisibility order on monomials <= D."""
    monos = [m for d in range(1, D + 1) for m in monomials_of_degree(n, d)]
    M = len(monos)
    if M > CENSUS_GUARD:
        raise GuardError(f"census needs M <= {CENSUS_GUARD}, got {M}")

    comparable = [
        [j for j in range(M) if j != i and (divides(monos[i], monos[j]) or divides(monos[j], monos[i]))]
        for i in range(M)
    ]
    out: List[MonomialIdeal] = []
    chosen: List[int] = []
    blocked = [0] * M

    def extend(idx: int):
        if idx == M:
            out.append(MonomialIdeal(n, tuple(monos[i] for i in chosen)))
            return
        extend(idx + 1)
        if not blocked[idx]:
            chosen.append(idx)
            for j in comparable[idx]:
                blocked[j] += 1
            extend(idx + 1)
            for j in comparable[idx]:
                blocked[j] -= 1
            chosen.pop()

    extend(0)
    return IdealCensus(n, D, tuple(out))


def _validate_vectors(n: int, D: int, h: Sequence[int], beta: Sequence[int] | None):
    # a too-large h(d) is merely unattainable (no ideal has it), so the
    # upper range is not checked here
    if len(h) != D:
        raise ValueError("Hilbert vector must have one entry per degree 1..D")
    for d, hd in enumerate(h, start=1):
        if hd < 0:
            raise ValueError(f"h({d}) = {hd} is negative")
    if beta is not None and len(beta) != D:
        raise ValueError("Betti vector must have one entry per degree 1..D")


def nmon(n: int, D: int, h: Sequence[int], beta: Sequence[int]) -> int:
    """Count monomial ideals with Hilbert vector h and generator degree counts beta.

    Backtracks over the per-degree sets of ideal monomials.  A valid choice at
    degree d must contain every multiple of a degree-(d-1) ideal monomial, have
    exactly C(n+d-1,d) - h(d) elements, and introduce exactly beta(d) new
    elements (those are the minimal generators).
    """
    _validate_vectors(n, D, h, beta)
    h = tuple(h)
    beta = tuple(beta)
    by_degree = [list(monomials_of_degree(n, d)) for d in range(1, D + 1)]

    total = 0

    def extend(d: int, prev_level: frozenset):
        nonlocal total
        if d > D:
            total += 1
            return
        monos = by_degree[d - 1]
        target = count_monomials_exact(n, d) - h[d - 1]
        shadow = frozenset(
            m for m in monos if any(divides(g, m) for g in prev_level)
        )
        extra = target - len(shadow)
        if extra != beta[d - 1] or extra < 0:
            return
        candidates = [m for m in monos if m not in shadow]
        for pick in itertools.combinations(candidates, extra):
            extend(d + 1, shadow | frozenset(pick))

    extend(1, frozenset())
    return total


def lex_segment_ideal(h: Sequence[int], n: int, D: int) -> MonomialIdeal:
    """The lex-segment ideal realizing Hilbert vector h, if one exists.

    Degree by degree, picks the lex-largest C(n+d-1,d) - h(d) monomials; the
    vector is attainable exactly when each chosen segment contains the
    multiples of the previous one.
    """
    _validate_vectors(n, D, h, None)
    selected: List[Monomial] = []
    prev: frozenset = frozenset()
    for d in range(1, D + 1):
        monos = sorted(monomials_of_degree(n, d), reverse=True)  # lex descending
        k = count_monomials_exact(n, d) - h[d - 1]
        if k < 0:
            raise UnattainableHilbertError(
                f"h({d}) exceeds the degree-{d} monomial count"
            )
        segment = frozenset(monos[:k])
        shadow = frozenset(m for m in monos if any(divides(g, m) for g in prev))
        if not shadow <= segment:
            raise UnattainableHilbertError(
                f"h is not an attainable Hilbert vector (fails at degree {d})"
            )
        selected.extend(segment)
        prev = segment
    return minimalize(n, selected)


def is_attainable_hilbert(h: Sequence[int], n: int, D: int) -> bool:
    try:
        lex_segment_ideal(h, n, D)
        return True
    except UnattainableHilbertError:
        return False


def lex_betti_bounds(h: Sequence[int], n: int, D: int) -> tuple:
    """Componentwise upper bounds for graded generator counts at fixed h.

    The lex-segment ideal maximizes every graded Betti number among monomial
    ideals with the same Hilbert function.
    """
    return lex_segment_ideal(h, n, D).graded_betti1(D)


def prob_hilbert(params: ERParams, h: Sequence[int]) -> Fraction:
    """P(Hilbert vector of the random ideal = h) under the uniform model.

    Sums nmon over all generator-count vectors dominated by the lex-segment
    bounds; unattainable vectors get probability zero.
    """
    n, D = params.n, params.D
    _validate_vectors(n, D, h, None)
    try:
        bounds = lex_betti_bounds(h, n, D)
    except UnattainableHilbertError:
        return Fraction(0)
    p = Fraction(params.p)
    s = sum(h)
    total = Fraction(0)
    for j in itertools.product(*(range(b + 1) for b in bounds)):
        cnt = nmon(n, D, h, j)
        if cnt:
            total += cnt * p ** sum(j) * (1 - p) ** s
    return total
