"""Samplers for the random monomial ideal models.

Randomness contract: the coins for sample s are drawn from a counter-based
stream keyed by (master_seed, stream_index, s), so results are reproducible
and independent of batching or worker layout.  In the dense regime the bit
for monomial index k within a sample is the k-th draw of that stream.

When the monomial pool is too large to draw a uniform per monomial
(M > SPARSE_THRESHOLD), degree-block binomial counts plus uniform index
choices give the same distribution; the regime is a fixed function of (n, D).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from .core import (
    Monomial,
    MonomialIdeal,
    count_monomials_exact,
    minimalize,
    monomials_of_degree,
)
from .exact import ERParams, GeneralParams, GradedParams
from .topology import CFParams, SimplicialComplex

SPARSE_THRESHOLD = 1 << 17


@dataclass(frozen=True)
class Seed:
    """Master seed plus a stream index for independent experiment arms."""

    master: int
    stream: int = 0


def _as_seed(seed) -> Seed:
    if isinstance(seed, Seed):
        return seed
    return Seed(int(seed))


def rng_for_sample(seed, sample_index: int) -> np.random.Generator:
    """The deterministic per-sample generator."""
    s = _as_seed(seed)
    ss = np.random.SeedSequence(entropy=s.master, spawn_key=(s.stream, sample_index))
    return np.random.Generator(np.random.Philox(ss))


# ---------------------------------------------------------------------------
# the shared monomial table for a given (n, D)

@dataclass(frozen=True)
class SampleSpace:
    """All non-constant monomials of degree <= D, in enumeration order."""

    n: int
    D: int
    exponents: np.ndarray  # (M, n) int32, grlex order
    degrees: np.ndarray  # (M,) int32
    support_masks: np.ndarray  # (M,) int64, bit v-1 set when x_v divides
    support_sizes: np.ndarray  # (M,) int8
    offsets: tuple  # block start per degree, offsets[d-1]..offsets[d]

    @property
    def M(self) -> int:
        return len(self.degrees)

    def monomial(self, idx: int) -> Monomial:
        return tuple(int(e) for e in self.exponents[idx])

    def monomials(self, idx: Sequence[int]) -> List[Monomial]:
        return [self.monomial(i) for i in idx]


def _degree_block(n: int, d: int) -> np.ndarray:
    """Exponent rows of degree d in lex-descending order."""
    if n == 1:
        return np.array([[d]], dtype=np.int32)
    # compositions of d into n parts from divider positions
    dividers = np.array(
        list(itertools.combinations(range(d + n - 1), n - 1)), dtype=np.int32
    )
    bounds = np.hstack(
        [
            np.full((len(dividers), 1), -1, dtype=np.int32),
            dividers,
            np.full((len(dividers), 1), d + n - 1, dtype=np.int32),
        ]
    )
    comp = np.diff(bounds, axis=1) - 1
    return comp[::-1].copy()


@lru_cache(maxsize=32)
def sample_space(n: int, D: int) -> SampleSpace:
    blocks = [_degree_block(n, d) for d in range(1, D + 1)]
    exps = np.vstack(blocks)
    degrees = exps.sum(axis=1).astype(np.int32)
    powers = (1 << np.arange(n, dtype=np.int64))
    support_masks = ((exps > 0) @ powers).astype(np.int64)
    support_sizes = (exps > 0).sum(axis=1).astype(np.int8)
    offsets = [0]
    for b in blocks:
        offsets.append(offsets[-1] + len(b))
    return SampleSpace(n, D, exps, degrees, support_masks, support_sizes, tuple(offsets))


def _degree_probs(params) -> List[float]:
    if isinstance(params, ERParams):
        return [float(params.p)] * params.D
    if isinstance(params, GradedParams):
        return [float(q) for q in params.p_by_degree]
    raise TypeError("degree-homogeneous sampling needs the uniform or graded model")


def draw_indices(params, seed, sample_index: int = 0) -> np.ndarray:
    """Indices (ascending) of the monomials drawn for one sample."""
    space = sample_space(params.n, params.D)
    rng = rng_for_sample(seed, sample_index)
    if isinstance(params, GeneralParams):
        if space.M > SPARSE_THRESHOLD:
            raise ValueError("general model sampling is dense; M too large")
        probs = np.zeros(space.M)
        pm = params.prob_map()
        for i in range(space.M):
            q = pm.get(space.monomial(i))
            if q is not None:
                probs[i] = float(q)
        u = rng.random(space.M)
        return np.nonzero(u < probs)[0].astype(np.int64)

    pd = _degree_probs(params)
    if space.M <= SPARSE_THRESHOLD:
        u = rng.random(space.M)
        thresholds = np.array(pd, dtype=np.float64)[space.degrees - 1]
        return np.nonzero(u < thresholds)[0].astype(np.int64)

    picked = []
    for d in range(1, params.D + 1):
        base = space.offsets[d - 1]
        size = space.offsets[d] - base
        k = int(rng.binomial(size, pd[d - 1]))
        if k:
            idx = rng.choice(size, size=k, replace=False)
            picked.append(np.sort(idx.astype(np.int64)) + base)
    if not picked:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(picked)


def _indices_to_pair(space: SampleSpace, idx: np.ndarray):
    B = space.monomials(idx)
    return B, minimalize(space.n, B)


def sample_er(params: ERParams, seed, sample_index: int = 0):
    """One draw from the uniform model: (monomial set B, its ideal)."""
    idx = draw_indices(params, seed, sample_index)
    return _indices_to_pair(sample_space(params.n, params.D), idx)


def sample_graded(params: GradedParams, seed, sample_index: int = 0):
    """One draw from the graded model."""
    idx = draw_indices(params, seed, sample_index)
    return _indices_to_pair(sample_space(params.n, params.D), idx)


def sample_general(params: GeneralParams, seed, sample_index: int = 0):
    """One draw from the general (per-monomial probability) model."""
    idx = draw_indices(params, seed, sample_index)
    return _indices_to_pair(sample_space(params.n, params.D), idx)


def squarefree_params(n: int, D: int, p) -> GeneralParams:
    """The general model giving probability p to every squarefree monomial."""
    probs = {}
    for k in range(1, min(n, D) + 1):
        for c in itertools.combinations(range(n), k):
            probs[tuple(1 if i in c else 0 for i in range(n))] = Fraction(p)
    return GeneralParams.from_dict(n, D, probs)


# ---------------------------------------------------------------------------
# hierarchical random complexes

def cf_face_order(n: int, r: int) -> List[frozenset]:
    """Candidate faces of dimension 0..r in (dimension, lex) order."""
    faces = []
    for k in range(1, r + 2):
        faces.extend(frozenset(c) for c in itertools.combinations(range(1, n + 1), k))
    return faces


def cf_complex_from_coins(cf: CFParams, keep: Dict[frozenset, bool]) -> SimplicialComplex:
    """Assemble the complex given one coin per candidate face.

    A face enters when its coin is true and every boundary face entered;
    this is the deterministic core shared by the sampler and by exhaustive
    enumeration over coin patterns.
    """
    faces = {frozenset()}
    for f in cf_face_order(cf.n, cf.r):
        if keep.get(f, False) and all(f - {v} in faces for v in f):
            faces.add(f)
    return SimplicialComplex(cf.n, frozenset(faces))


def sample_cf_complex(cf: CFParams, seed, sample_index: int = 0) -> SimplicialComplex:
    """One draw from the hierarchical complex model."""
    order = cf_face_order(cf.n, cf.r)
    rng = rng_for_sample(seed, sample_index)
    u = rng.random(len(order))
    keep = {
        f: bool(u[i] < float(cf.prob_dim(len(f) - 1))) for i, f in enumerate(order)
    }
    return cf_complex_from_coins(cf, keep)
