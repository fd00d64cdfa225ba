"""Monte Carlo experiments over the random ideal models.

An experiment estimates P(property) on a seeded sample, reports a Wilson 95%
interval, and can sweep a probability grid, writing CSV/JSON plus an optional
SVG figure.  Reruns with the same seed are byte-identical; sample-level
parallelism cannot change any count because every sample owns its stream.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import tempfile
from dataclasses import dataclass, asdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .core import GuardError, MonomialIdeal, count_monomials_up_to, minimalize
from .exact import ERParams, GeneralParams, GradedParams
from .sampling import Seed, draw_indices, sample_space, squarefree_params
from .topology import stanley_reisner_complex, z2_homology

HOMOLOGY_EXPERIMENT_GUARD = 7
IDEAL_SIZE_GUARD = 20000
Z95 = 1.959963984540054


# ---------------------------------------------------------------------------
# properties of a drawn monomial set

class SampleView:
    """Lazy access to one drawn sample: raw indices now, the ideal on demand."""

    __slots__ = ("space", "idx", "_ideal")

    def __init__(self, space, idx: np.ndarray):
        self.space = space
        self.idx = idx
        self._ideal = None

    @property
    def size(self) -> int:
        return int(self.idx.size)

    def degrees(self) -> np.ndarray:
        return self.space.degrees[self.idx]

    def support_masks(self) -> np.ndarray:
        return self.space.support_masks[self.idx]

    def support_sizes(self) -> np.ndarray:
        return self.space.support_sizes[self.idx]

    def ideal(self) -> MonomialIdeal:
        if self._ideal is None:
            if self.size > IDEAL_SIZE_GUARD:
                raise GuardError(
                    f"refusing to minimalize a set of {self.size} monomials"
                )
            self._ideal = minimalize(self.space.n, self.space.monomials(self.idx))
        return self._ideal


@lru_cache(maxsize=65536)
def _dim_from_edges(n: int, edges: frozenset) -> int:
    """Krull dimension from the set of support bitmasks present in the sample.

    Supports of non-minimal monomials contain a minimal generator's support,
    so extra edges never change the transversal number.
    """
    if not edges:
        return n
    for k in range(1, n + 1):
        for cand in itertools.combinations(range(n), k):
            cm = 0
            for v in cand:
                cm |= 1 << v
            if all(e & cm for e in edges):
                return n - k
    raise AssertionError("unreachable")


def _sample_dim(view: SampleView) -> int:
    masks = frozenset(int(m) for m in np.unique(view.support_masks()))
    return _dim_from_edges(view.space.n, masks)


@dataclass(frozen=True)
class Property:
    name: str
    fn: Callable[[SampleView], bool]


def parse_property(spec: str) -> Property:
    """Parse a property description into a predicate on samples.

    Supported forms: zero-ideal, strongly-generic, dim=T, dim<=T, initdeg=K,
    initdeg<=K, initdeg>K, dc<=K, no-support<=T, homI!=0 (e.g. hom1!=0).
    """
    s = spec.strip()
    if s == "zero-ideal":
        return Property(s, lambda v: v.size == 0)
    if s == "strongly-generic":
        return Property(s, lambda v: v.ideal().is_strongly_generic())
    for prefix, op in (("dim<=", "le"), ("dim=", "eq")):
        if s.startswith(prefix):
            t = int(s[len(prefix):])
            if op == "le":
                return Property(s, lambda v, t=t: _sample_dim(v) <= t)
            return Property(s, lambda v, t=t: _sample_dim(v) == t)
    for prefix, op in (("initdeg<=", "le"), ("initdeg>", "gt"), ("initdeg=", "eq")):
        if s.startswith(prefix):
            k = int(s[len(prefix):])
            def fn(v: SampleView, k=k, op=op) -> bool:
                if v.size == 0:
                    return False  # initial degree undefined for the zero ideal
                d = int(v.degrees().min())
                return {"le": d <= k, "gt": d > k, "eq": d == k}[op]
            return Property(s, fn)
    if s.startswith("dc<="):
        k = int(s[4:])
        def dc_fn(v: SampleView, k=k) -> bool:
            if v.size == 0:
                return False
            return v.ideal().degree_complexity() <= k
        return Property(s, dc_fn)
    if s.startswith("no-support<="):
        t = int(s[12:])
        return Property(s, lambda v, t=t: bool((v.support_sizes() > t).all()))
    if s.startswith("hom") and s.endswith("!=0"):
        i = int(s[3:-3])
        def hom_fn(v: SampleView, i=i) -> bool:
            if v.space.n > HOMOLOGY_EXPERIMENT_GUARD:
                raise GuardError(
                    f"homology experiments need n <= {HOMOLOGY_EXPERIMENT_GUARD}"
                )
            complex_ = stanley_reisner_complex(v.ideal().radical())
            return z2_homology(complex_)[i] != 0
        return Property(s, hom_fn)
    raise ValueError(f"unknown property {spec!r}")


# ---------------------------------------------------------------------------
# estimation

@dataclass(frozen=True)
class EstimateRecord:
    model: str
    n: int
    D: int
    p: float
    property: str
    freq: float
    lo: float
    hi: float
    N: int
    master_seed: int
    stream: int


def wilson_interval(hits: int, N: int, z: float = Z95) -> Tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if N <= 0:
        raise ValueError("need N >= 1")
    phat = hits / N
    denom = 1 + z * z / N
    center = (phat + z * z / (2 * N)) / denom
    half = z * math.sqrt(phat * (1 - phat) / N + z * z / (4 * N * N)) / denom
    # rounding must never push the observed frequency outside its own interval
    return min(max(0.0, center - half), phat), max(min(1.0, center + half), phat)


def _model_name(params) -> str:
    if isinstance(params, ERParams):
        return "uniform"
    if isinstance(params, GradedParams):
        return "graded"
    if isinstance(params, GeneralParams):
        return "general"
    raise TypeError(f"unknown model {params!r}")


def _param_p(params) -> float:
    if isinstance(params, ERParams):
        return float(params.p)
    if isinstance(params, GeneralParams):
        qs = {q for _, q in params.probs if q != 0}
        if len(qs) == 1:
            return float(qs.pop())
        return float("nan")
    return float("nan")


def _count_hits(spec: str, params, seed: Seed, start: int, stop: int) -> int:
    prop = parse_property(spec)
    space = sample_space(params.n, params.D)
    hits = 0
    for i in range(start, stop):
        view = SampleView(space, draw_indices(params, seed, i))
        if prop.fn(view):
            hits += 1
    return hits


def estimate(
    property_spec: str, params, N: int, seed, jobs: int = 1
) -> EstimateRecord:
    """Estimate P(property) from N seeded samples with a Wilson 95% interval."""
    s = seed if isinstance(seed, Seed) else Seed(int(seed))
    hits = None
    if jobs > 1:
        # every sample owns its stream, so any partition of 0..N gives the
        # same counts; fork keeps worker startup cheap and import-safe
        try:
            from multiprocessing import get_context

            ctx = get_context("fork")
        except ValueError:
            ctx = None
        if ctx is not None:
            bounds = np.linspace(0, N, jobs + 1).astype(int)
            args = [
                (property_spec, params, s, int(a), int(b))
                for a, b in zip(bounds[:-1], bounds[1:])
                if a < b
            ]
            with ctx.Pool(len(args)) as pool:
                hits = sum(pool.starmap(_count_hits, args))
    if hits is None:
        hits = _count_hits(property_spec, params, s, 0, N)
    lo, hi = wilson_interval(hits, N)
    return EstimateRecord(
        model=_model_name(params),
        n=params.n,
        D=params.D,
        p=_param_p(params),
        property=property_spec,
        freq=hits / N,
        lo=lo,
        hi=hi,
        N=N,
        master_seed=s.master,
        stream=s.stream,
    )


# ---------------------------------------------------------------------------
# sweeps

@dataclass(frozen=True)
class SweepSpec:
    model: str  # "uniform" or "squarefree"
    n: int
    D: int
    properties: tuple
    p_grid: tuple
    N: int
    master_seed: int
    jobs: int = 1


def default_p_grid(n: int, D: int, count: int = 20) -> tuple:
    """Geometric grid between D^-n and D^-1."""
    lo, hi = D ** -float(n), D ** -1.0
    return tuple(float(x) for x in np.geomspace(lo, hi, count))


def _sweep_params(spec: SweepSpec, p: float):
    if spec.model == "uniform":
        return ERParams(spec.n, spec.D, Fraction(p))
    if spec.model == "squarefree":
        return squarefree_params(spec.n, spec.D, Fraction(p))
    raise ValueError("sweep model must be 'uniform' or 'squarefree'")


def sweep(spec: SweepSpec) -> List[EstimateRecord]:
    """Estimate every property at every grid point; one stream per point."""
    records = []
    for stream, p in enumerate(spec.p_grid):
        params = _sweep_params(spec, p)
        seed = Seed(spec.master_seed, stream)
        for prop in spec.properties:
            records.append(estimate(prop, params, spec.N, seed, jobs=spec.jobs))
    return records


CSV_COLUMNS = ("n", "D", "p", "property", "freq", "lo", "hi", "N", "seed")


def records_to_csv(records: Sequence[EstimateRecord]) -> str:
    lines = ["# randmono-sweep-v1", ",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    str(r.D),
                    repr(r.p),
                    r.property,
                    repr(r.freq),
                    repr(r.lo),
                    repr(r.hi),
                    str(r.N),
                    f"{r.master_seed}/{r.stream}",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def records_to_json(records: Sequence[EstimateRecord]) -> str:
    payload = {
        "format": "randmono-sweep-v1",
        "records": [asdict(r) for r in records],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def atomic_write(path: str, data: str) -> None:
    """Write via a temporary file and rename, so readers never see a torn file."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-randmono-")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(data)
        # mkstemp files are 0600; give the artifact normal permissions
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_figure(records: Sequence[EstimateRecord], path: str, title: str = "") -> None:
    """Frequency curves per property on a log-p axis, saved as an SVG file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    # without a fixed salt the element ids are fresh uuids on every save
    matplotlib.rcParams["svg.hashsalt"] = "randmono"
    fig, ax = plt.subplots(figsize=(7, 4.5))
    props = sorted({r.property for r in records})
    for prop in props:
        rows = sorted((r for r in records if r.property == prop), key=lambda r: r.p)
        ps = [r.p for r in rows]
        ax.fill_between(ps, [r.lo for r in rows], [r.hi for r in rows], alpha=0.2)
        ax.plot(ps, [r.freq for r in rows], marker="o", ms=3, label=prop)
    ax.set_xscale("log")
    ax.set_xlabel("p")
    ax.set_ylabel("frequency")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


# ---------------------------------------------------------------------------
# trend checks and the critical region

@dataclass(frozen=True)
class ThresholdReport:
    rows: tuple
    increasing: bool
    decreasing: bool

    @property
    def first(self) -> float:
        return self.rows[0].freq

    @property
    def last(self) -> float:
        return self.rows[-1].freq


def threshold_check(
    property_spec: str, params_grid: Sequence, N: int, seed, jobs: int = 1
) -> ThresholdReport:
    """Frequencies along a parameter grid plus monotone trend booleans."""
    s = seed if isinstance(seed, Seed) else Seed(int(seed))
    rows = []
    for stream_offset, params in enumerate(params_grid):
        rows.append(
            estimate(
                property_spec,
                params,
                N,
                Seed(s.master, s.stream + stream_offset),
                jobs=jobs,
            )
        )
    freqs = [r.freq for r in rows]
    inc = all(a <= b for a, b in zip(freqs, freqs[1:]))
    dec = all(a >= b for a, b in zip(freqs, freqs[1:]))
    return ThresholdReport(tuple(rows), inc, dec)


@dataclass(frozen=True)
class CriticalRegionRecord:
    n: int
    D: int
    M: int
    p: Fraction
    expected_size: Fraction
    variance: Fraction
    note: str


def expected_set_size(params) -> Fraction:
    """E|B| exactly: sum of the inclusion probabilities."""
    if isinstance(params, ERParams):
        return Fraction(params.p) * count_monomials_up_to(params.n, params.D)
    if isinstance(params, GradedParams):
        from .core import count_monomials_exact

        return sum(
            Fraction(q) * count_monomials_exact(params.n, d)
            for d, q in enumerate(params.p_by_degree, start=1)
        )
    if isinstance(params, GeneralParams):
        return sum((q for _, q in params.probs), Fraction(0))
    raise TypeError("unknown model")


def critical_region_check(n: int, D: int) -> CriticalRegionRecord:
    """Exact size moments at the critical probability p = 1/M.

    There E|B| = 1 and Var|B| = 1 - p; the unit-variance shorthand sometimes
    attached to this regime is off by exactly p.
    """
    M = count_monomials_up_to(n, D)
    p = Fraction(1, M)
    e = p * M
    var = M * p * (1 - p)
    note = "Var|B| = 1 - p at the critical probability, not 1"
    return CriticalRegionRecord(n, D, M, p, e, var, note)
