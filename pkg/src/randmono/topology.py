"""Simplicial complexes, Z2 homology, and the squarefree ideal dictionary.

A complex on vertex set {1..n} is stored as its full face set, including the
empty face.  The void complex (no faces at all) is representable but carries
no homology and has no squarefree ideal here; it never arises from sampling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .core import (
    GuardError,
    MonomialIdeal,
    minimalize,
    support,
)

HOMOLOGY_GUARD = 20
CF_TABLE_GUARD = 4


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex on {1..n}, faces stored explicitly."""

    n: int
    faces: frozenset

    def __post_init__(self):
        for f in self.faces:
            if not all(1 <= v <= self.n for v in f):
                raise ValueError("face vertices must lie in 1..n")
        if self.faces:
            if frozenset() not in self.faces:
                raise ValueError("a non-void complex must contain the empty face")
            for f in self.faces:
                for v in f:
                    if f - {v} not in self.faces:
                        raise ValueError("face set is not downward closed")

    @staticmethod
    def from_facets(n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = {frozenset()}
        for fac in facets:
            fac = frozenset(fac)
            for k in range(len(fac) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(fac, k))
        return SimplicialComplex(n, frozenset(faces))

    @property
    def is_void(self) -> bool:
        return not self.faces

    def dim(self) -> int:
        """Dimension of the complex; -1 for {empty face}, undefined when void."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.faces) - 1

    def f_vector(self) -> tuple:
        """(f_0, ..., f_{n-1}): face counts by dimension."""
        counts = [0] * self.n
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def minimal_nonfaces(self) -> tuple:
        """Inclusion-minimal subsets of {1..n} that are not faces."""
        if self.is_void:
            raise ValueError("the void complex has no squarefree ideal")
        verts = range(1, self.n + 1)
        out = []
        for k in range(1, self.n + 1):
            for c in itertools.combinations(verts, k):
                s = frozenset(c)
                if s not in self.faces and not any(m <= s for m in out):
                    out.append(s)
        return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces are the squarefree monomials outside the ideal."""
    if not ideal.is_squarefree:
        raise ValueError("the face-ring dictionary needs a squarefree ideal")
    n = ideal.n
    faces = set()
    for k in range(0, n + 1):
        for c in itertools.combinations(range(1, n + 1), k):
            m = tuple(1 if i + 1 in c else 0 for i in range(n))
            if not ideal.contains(m):
                faces.add(frozenset(c))
    return SimplicialComplex(n, frozenset(faces))


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """The squarefree ideal generated by the minimal non-faces."""
    gens = [
        tuple(1 if i + 1 in s else 0 for i in range(complex_.n))
        for s in complex_.minimal_nonfaces()
    ]
    return minimalize(complex_.n, gens)


# ---------------------------------------------------------------------------
# homology over GF(2)

def _gf2_rank(columns: List[int]) -> int:
    """Rank of a set of bitmask columns by elimination on lowest set bits."""
    pivots: Dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col & -col
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                rank += 1
                break
            col ^= piv
    return rank


def z2_homology(complex_: SimplicialComplex) -> tuple:
    """Reduced Betti numbers (b0, ..., b_{n-1}) over GF(2).

    The empty face is kept as the single (-1)-cell, so b0 counts components
    minus one and the complex {empty face} has all zeros.
    """
    if complex_.is_void:
        raise ValueError("the void complex has no homology")
    if complex_.n > HOMOLOGY_GUARD:
        raise GuardError(f"homology needs n <= {HOMOLOGY_GUARD}")
    by_dim: Dict[int, List[frozenset]] = {}
    for f in complex_.faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for faces in by_dim.values():
        faces.sort(key=lambda s: sorted(s))
    index = {
        d: {f: i for i, f in enumerate(faces)} for d, faces in by_dim.items()
    }

    def boundary_rank(d: int) -> int:
        """Rank of the boundary map from d-faces to (d-1)-faces."""
        if d - 1 not in by_dim or d not in by_dim:
            return 0
        cols = []
        for f in by_dim[d]:
            col = 0
            for v in f:
                col |= 1 << index[d - 1][f - {v}]
            cols.append(col)
        return _gf2_rank(cols)

    betti = []
    for d in range(0, complex_.n):
        cells = len(by_dim.get(d, []))
        betti.append(cells - boundary_rank(d) - boundary_rank(d + 1))
    return tuple(betti)


# ---------------------------------------------------------------------------
# the hierarchical complex model and its ideal-side distribution

@dataclass(frozen=True)
class CFParams:
    """Hierarchical complex model: dimension-i faces survive with prob p_tilde[i]."""

    n: int
    r: int
    p_tilde: tuple

    def __post_init__(self):
        if not 0 <= self.r <= self.n - 1:
            raise ValueError("need 0 <= r <= n-1")
        if len(self.p_tilde) != self.r + 1:
            raise ValueError("need one probability per dimension 0..r")
        if any(not 0 <= Fraction(q) <= 1 for q in self.p_tilde):
            raise ValueError("probabilities must lie in [0, 1]")

    def prob_dim(self, d: int) -> Fraction:
        """Survival probability for a d-face; zero above dimension r."""
        if 0 <= d <= self.r:
            return Fraction(self.p_tilde[d])
        return Fraction(0)


def cf_parameters(cf: CFParams, D: int):
    """Per-monomial probabilities matching the hierarchical complex model.

    Requires D = r + 1.  Squarefree monomials of degree j are included with
    probability 1 - p_tilde[j-1]; everything else gets zero.
    """
    from .exact import GeneralParams

    if D != cf.r + 1:
        raise ValueError("the dictionary requires D = r + 1")
    probs = {}
    for k in range(1, min(D, cf.n) + 1):
        for c in itertools.combinations(range(1, cf.n + 1), k):
            m = tuple(1 if i + 1 in c else 0 for i in range(cf.n))
            probs[m] = 1 - cf.prob_dim(k - 1)
    return GeneralParams.from_dict(cf.n, D, probs)


def cf_probability(complex_: SimplicialComplex, cf: CFParams) -> Fraction:
    """P(hierarchical model yields exactly this complex).

    Product over dimensions 0..r of p^(faces) (1-p)^(minimal non-faces);
    non-faces above dimension r are automatic and contribute nothing.
    """
    if complex_.is_void:
        return Fraction(0)
    if complex_.dim() > cf.r:
        return Fraction(0)
    f = complex_.f_vector()
    e = [0] * (complex_.n + 1)
    for s in complex_.minimal_nonfaces():
        e[len(s) - 1] += 1
    out = Fraction(1)
    for i in range(cf.r + 1):
        q = cf.prob_dim(i)
        out *= q ** (f[i] if i < len(f) else 0) * (1 - q) ** e[i]
    return out


def all_complexes(n: int, max_dim: int | None = None) -> List[SimplicialComplex]:
    """Every non-void complex on {1..n}, optionally capped in dimension."""
    if n > CF_TABLE_GUARD:
        raise GuardError(f"complex enumeration needs n <= {CF_TABLE_GUARD}")
    verts = list(range(1, n + 1))
    subsets = []
    for k in range(1, n + 1):
        if max_dim is None or k - 1 <= max_dim:
            subsets.extend(frozenset(c) for c in itertools.combinations(verts, k))
    out = []

    def extend(idx: int, faces: set):
        if idx == len(subsets):
            out.append(SimplicialComplex(n, frozenset(faces)))
            return
        extend(idx + 1, faces)
        s = subsets[idx]
        if all(s - {v} in faces for v in s):
            faces.add(s)
            extend(idx + 1, faces)
            faces.remove(s)

    # subsets are listed by increasing size, so downward closure can be
    # checked incrementally
    extend(0, {frozenset()})
    return out


def cf_distribution_table(cf: CFParams):
    """Exact distribution of the hierarchical model, computed two ways.

    Returns a list of (complex, P_model, P_ideal) triples over all complexes
    of dimension <= r, where P_ideal evaluates the matching squarefree ideal
    under the per-monomial model.  The two columns agree and each sums to 1.

    The ideal-side product runs over all squarefree monomials up to degree n
    (with zero survival above dimension r), which keeps the dictionary exact
    even when r < n - 1.
    """
    from .exact import GeneralParams, prob_ideal_general

    if cf.n > CF_TABLE_GUARD:
        raise GuardError(f"distribution table needs n <= {CF_TABLE_GUARD}")
    probs = {}
    for k in range(1, cf.n + 1):
        for c in itertools.combinations(range(1, cf.n + 1), k):
            m = tuple(1 if i + 1 in c else 0 for i in range(cf.n))
            probs[m] = 1 - cf.prob_dim(k - 1)
    padded = GeneralParams.from_dict(cf.n, cf.n, probs)

    rows = []
    for Y in all_complexes(cf.n, max_dim=cf.r):
        p_model = cf_probability(Y, cf)
        p_ideal = prob_ideal_general(stanley_reisner_ideal(Y), padded)
        rows.append((Y, p_model, p_ideal))
    return rows
