"""Exact distributions for random monomial ideals, plus brute-force oracles.

Probabilities are exact rationals throughout.  The uniform model draws each
non-constant monomial of degree <= D independently with probability p; the
graded model replaces p by a per-degree vector, the general model by a
per-monomial assignment.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .core import (
    GuardError,
    Monomial,
    MonomialIdeal,
    count_monomials_up_to,
    degree,
    divides,
    grlex_key,
    minimalize,
    monomials_up_to,
    support,
)

BRUTE_FORCE_GUARD = 25  # max monomial count M for 2^M subset enumeration
CLUTTER_GUARD = 5  # antichain counts explode past n = 5


# ---------------------------------------------------------------------------
# model parameters

@dataclass(frozen=True)
class ERParams:
    """Uniform inclusion model: every monomial is drawn with the same p."""

    n: int
    D: int
    p: Fraction

    def __post_init__(self):
        if self.n < 1 or self.D < 1:
            raise ValueError("need n >= 1 and D >= 1")
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")


@dataclass(frozen=True)
class GradedParams:
    """Per-degree inclusion probabilities (p_1, ..., p_D)."""

    n: int
    D: int
    p_by_degree: tuple

    def __post_init__(self):
        if len(self.p_by_degree) != self.D:
            raise ValueError("need one probability per degree 1..D")
        if any(not 0 <= q <= 1 for q in self.p_by_degree):
            raise ValueError("probabilities must lie in [0, 1]")


@dataclass(frozen=True)
class GeneralParams:
    """Per-monomial inclusion probabilities; monomials absent from the map get 0."""

    n: int
    D: int
    probs: tuple  # tuple of (monomial, Fraction) pairs, grlex-sorted

    @staticmethod
    def from_dict(n: int, D: int, probs: dict) -> "GeneralParams":
        items = []
        for m, q in sorted(probs.items(), key=lambda kv: grlex_key(kv[0])):
            m = tuple(m)
            if len(m) != n or not 1 <= degree(m) <= D:
                raise ValueError(f"monomial {m} outside the model range")
            if not 0 <= q <= 1:
                raise ValueError("probabilities must lie in [0, 1]")
            items.append((m, Fraction(q)))
        return GeneralParams(n, D, tuple(items))

    def prob_of(self, m: Monomial) -> Fraction:
        for mm, q in self.probs:
            if mm == m:
                return q
        return Fraction(0)

    def prob_map(self) -> dict:
        return dict(self.probs)


# ---------------------------------------------------------------------------
# hypergraphs, transversals, Krull dimension

@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices {1..n} with a set of non-empty edges."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            if not e or not all(1 <= v <= self.n for v in e):
                raise ValueError("edges must be non-empty subsets of 1..n")

    def is_clutter(self) -> bool:
        """True when no edge contains another."""
        return not any(
            a < b for a in self.edges for b in self.edges
        )


def support_hypergraph(n: int, monomials: Iterable[Monomial]) -> Hypergraph:
    """Edges are the distinct supports of the given monomials."""
    return Hypergraph(n, frozenset(support(m) for m in monomials if sum(m) > 0))


def transversal_number(h: Hypergraph) -> int:
    """Size of a smallest vertex set meeting every edge (0 when edgeless)."""
    if not h.edges:
        return 0
    verts = sorted(set().union(*h.edges))
    for k in range(1, len(verts) + 1):
        for cand in itertools.combinations(verts, k):
            cs = set(cand)
            if all(cs & e for e in h.edges):
                return k
    raise AssertionError("unreachable: the full vertex set is a transversal")


def min_edges(h: Hypergraph) -> Hypergraph:
    """Drop edges that contain another edge, leaving a clutter."""
    keep = [e for e in h.edges if not any(f < e for f in h.edges)]
    return Hypergraph(h.n, frozenset(keep))


def krull_dimension(ideal: MonomialIdeal) -> int:
    """dim S/I = n minus the transversal number of the generator supports.

    The zero ideal has dimension n.
    """
    h = support_hypergraph(ideal.n, ideal.gens)
    return ideal.n - transversal_number(h)


# ---------------------------------------------------------------------------
# exact ideal probabilities

def prob_ideal_er(ideal: MonomialIdeal, params: ERParams) -> Fraction:
    """P(random ideal = I) under the uniform model.

    Equals p^{beta_1} (1-p)^{s} where s counts the non-constant standard
    monomials of degree <= D.
    """
    if ideal.n != params.n:
        raise ValueError("ambient dimension mismatch")
    if ideal.gens and ideal.degree_complexity() > params.D:
        raise ValueError("ideal needs a generator of degree > D")
    p = Fraction(params.p)
    s = ideal.standard_count(params.D)
    return p ** ideal.beta1 * (1 - p) ** s


def prob_ideal_graded(ideal: MonomialIdeal, params: GradedParams) -> Fraction:
    """P(random ideal = I) under the graded model: a per-degree product."""
    if ideal.n != params.n:
        raise ValueError("ambient dimension mismatch")
    if ideal.gens and ideal.degree_complexity() > params.D:
        raise ValueError("ideal needs a generator of degree > D")
    betti = ideal.graded_betti1(params.D)
    hv = ideal.hilbert_vector(params.D)
    out = Fraction(1)
    for d in range(params.D):
        q = Fraction(params.p_by_degree[d])
        out *= q ** betti[d] * (1 - q) ** hv[d]
    return out


def prob_ideal_general(ideal: MonomialIdeal, params: GeneralParams) -> Fraction:
    """P(random ideal = I) under the general model.

    The drawn set realizes I exactly when it contains every minimal generator
    and avoids every monomial outside I; monomials of I above the generators
    are unconstrained.
    """
    if ideal.n != params.n:
        raise ValueError("ambient dimension mismatch")
    if ideal.gens and ideal.degree_complexity() > params.D:
        raise ValueError("ideal needs a generator of degree > D")
    pm = params.prob_map()
    out = Fraction(1)
    gens = set(ideal.gens)
    for m in monomials_up_to(params.n, params.D):
        q = pm.get(m, Fraction(0))
        if m in gens:
            out *= q
        elif not ideal.contains(m):
            out *= 1 - q
        if out == 0:
            return out
    return out


# ---------------------------------------------------------------------------
# brute-force oracle: enumerate every subset of candidate monomials

def _popcount(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).astype(np.int64)
    table = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)
    return table[a & 0xFFFF] + table[(a >> 16) & 0xFFFF]


def brute_force_distribution(params) -> Dict[MonomialIdeal, Fraction]:
    """Exact ideal distribution by summing over all 2^M generating sets.

    Accepts ERParams or GradedParams.  Independent of the closed formulas:
    each subset is minimalized directly (via divisor bitmasks) and its
    product weight accumulated on the resulting minimal generating set.
    """
    n, D = params.n, params.D
    monos = list(monomials_up_to(n, D))
    M = len(monos)
    if M > BRUTE_FORCE_GUARD:
        raise GuardError(f"brute force needs M <= {BRUTE_FORCE_GUARD}, got {M}")

    # the subset weight factors over monomial groups with equal probability:
    # one group for the uniform model, one per degree for the graded model
    if isinstance(params, ERParams):
        group_of = [0] * M
        group_prob = [Fraction(params.p)]
    elif isinstance(params, GradedParams):
        group_of = [degree(m) - 1 for m in monos]
        group_prob = [Fraction(q) for q in params.p_by_degree]
    else:
        raise TypeError("oracle supports the uniform and graded models")
    G = len(group_prob)
    group_masks = [0] * G
    for i, g in enumerate(group_of):
        group_masks[g] |= 1 << i
    group_sizes = [int(bin(m).count("1")) for m in group_masks]
    widths = [max(s.bit_length(), 1) for s in group_sizes]
    if M + sum(widths) > 62:
        raise GuardError("oracle key space exceeds 62 bits")

    # bit j set in div_mask[i] when monomial j properly divides monomial i
    div_mask = []
    for i, mi in enumerate(monos):
        mask = 0
        for j, mj in enumerate(monos):
            if i != j and divides(mj, mi):
                mask |= 1 << j
        div_mask.append(mask)

    # key = (minimal-generator mask, inclusion count per group), bit-packed
    buckets: Dict[int, int] = {}
    total = 1 << M
    chunk = 1 << 22
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        bs = np.arange(start, stop, dtype=np.int64)
        minmask = np.zeros_like(bs)
        for i in range(M):
            sel = ((bs >> i) & 1).astype(bool) & ((bs & div_mask[i]) == 0)
            minmask[sel] |= 1 << i
        key = minmask
        for g in range(G):
            cnt = _popcount(bs & group_masks[g])
            key = (key << widths[g]) | cnt
        uniq, counts = np.unique(key, return_counts=True)
        for k, c in zip(uniq.tolist(), counts.tolist()):
            buckets[k] = buckets.get(k, 0) + c

    dist: Dict[MonomialIdeal, Fraction] = {}
    for key, count in buckets.items():
        sizes = [0] * G
        for g in reversed(range(G)):
            sizes[g] = key & ((1 << widths[g]) - 1)
            key >>= widths[g]
        mm = key
        weight = Fraction(count)
        for g in range(G):
            q = group_prob[g]
            weight *= q ** sizes[g] * (1 - q) ** (group_sizes[g] - sizes[g])
        gens = [monos[i] for i in range(M) if (mm >> i) & 1]
        ideal = MonomialIdeal(n, tuple(sorted(gens, key=grlex_key)))
        dist[ideal] = dist.get(ideal, Fraction(0)) + weight
    return dist


# ---------------------------------------------------------------------------
# Krull dimension distribution

def monomials_with_support_count(n: int, D: int, size: int) -> int:
    """How many monomials of degree <= D have support of a given size.

    Counted directly; only the size of the support set matters by symmetry.
    """
    if size < 1 or size > n:
        return 0
    return sum(
        1
        for m in monomials_up_to(size, D)
        if all(e > 0 for e in m)
    )


def enumerate_clutters(n: int, tau: int) -> List[Hypergraph]:
    """All clutters on vertex set {1..n} whose transversal number equals tau."""
    if n > CLUTTER_GUARD:
        raise GuardError(f"clutter enumeration needs n <= {CLUTTER_GUARD}")
    verts = list(range(1, n + 1))
    subsets = []
    for k in range(1, n + 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(verts, k))

    out: List[Hypergraph] = []

    def extend(idx: int, chosen: List[frozenset]):
        if idx == len(subsets):
            h = Hypergraph(n, frozenset(chosen))
            if transversal_number(h) == tau:
                out.append(h)
            return
        extend(idx + 1, chosen)
        s = subsets[idx]
        if all(not (s <= t or t <= s) for t in chosen):
            chosen.append(s)
            extend(idx + 1, chosen)
            chosen.pop()

    extend(0, [])
    return out


def _clutter_sum(params: ERParams, t: int) -> Fraction:
    """P(dim S/I = t) as a sum over clutters with transversal number n - t.

    For each clutter, supports matching an edge must be hit at least once and
    supports containing no edge must be entirely absent; distinct supports
    involve disjoint monomial families, so the factors multiply.
    """
    n, D = params.n, params.D
    p = Fraction(params.p)
    verts = list(range(1, n + 1))
    all_supports = []
    for k in range(1, n + 1):
        all_supports.extend(frozenset(c) for c in itertools.combinations(verts, k))
    count_by_size = {k: monomials_with_support_count(n, D, k) for k in range(1, n + 1)}

    total = Fraction(0)
    for clutter in enumerate_clutters(n, n - t):
        term = Fraction(1)
        for e in clutter.edges:
            # no monomial of degree <= D can have support larger than D
            term *= 1 - (1 - p) ** count_by_size[len(e)]
            if term == 0:
                break
        if term == 0:
            continue
        for s in all_supports:
            if not any(e <= s for e in clutter.edges):
                term *= (1 - p) ** count_by_size[len(s)]
        total += term
    return total


def _closed_form(params: ERParams, t: int) -> Fraction:
    """Closed-form P(dim S/I = t) for t in {0, 1, n-1, n} (all t when n <= 4)."""
    n, D = params.n, params.D
    p = Fraction(params.p)
    q = 1 - p
    if t == 0:
        return (1 - q ** D) ** n
    if t == n:
        return q ** (math.comb(n + D, n) - 1)
    if t == 1:
        tot = Fraction(0)
        for j in range(n):
            tot += (
                math.comb(n, j)
                * (1 - q ** D) ** j
                * q ** (D * (n - j))
                * (1 - q ** math.comb(D, 2)) ** math.comb(n - j, 2)
            )
        return tot
    if t == n - 1:
        M = math.comb(n + D, n) - 1
        tot = -(q ** M)
        for j in range(1, n + 1):
            tot += (-1) ** (j - 1) * math.comb(n, j) * q ** (M - math.comb(n + D - j, n))
        return tot
    if n == 4 and t == 2:
        others = sum(_closed_form(params, s) for s in (0, 1, 3, 4))
        return 1 - others
    raise ValueError(
        f"no closed form for dim = {t} with n = {n}; use the clutter sum"
    )


def krull_dim_distribution(params: ERParams, t: int, method: str = "clutter_sum") -> Fraction:
    """Exact P(dim S/I = t) under the uniform model."""
    if not 0 <= t <= params.n:
        raise ValueError(f"dimension t must lie in 0..{params.n}")
    if method == "clutter_sum":
        return _clutter_sum(params, t)
    if method == "closed_form":
        return _closed_form(params, t)
    raise ValueError("method must be 'clutter_sum' or 'closed_form'")
