"""Command-line interface.

Subcommands cover model sampling, exact ideal probabilities, Krull
dimension and Hilbert function distributions, the full-ideal census,
generator-count asymptotics, face-complex homology, the hierarchical
complex cross-check, Monte Carlo sweeps, and the brute-force
distribution oracle.

Exit codes: 0 success, 1 a check assertion failed, 2 usage or data
error, 3 guard violation (the request is outside the enumerable range).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .asymptotics import (
    beta1_limit_bounds,
    expected_beta1_2vars_lambert,
    expected_beta1_limit,
)
from .core import (
    GuardError,
    MonomialIdeal,
    maximal_ideal,
    parse_ideal,
    parse_probability,
    zero_ideal,
)
from .counting import enumerate_monomial_ideals, lex_betti_bounds, nmon, prob_hilbert
from .exact import (
    ERParams,
    GradedParams,
    brute_force_distribution,
    krull_dim_distribution,
    krull_dimension,
    prob_ideal_er,
    prob_ideal_graded,
)
from .experiments import (
    SweepSpec,
    atomic_write,
    default_p_grid,
    records_to_csv,
    records_to_json,
    render_figure,
)
from .experiments import sweep as run_sweep
from .sampling import (
    Seed,
    sample_cf_complex,
    sample_er,
    sample_general,
    sample_graded,
    squarefree_params,
)
from .topology import CFParams, cf_distribution_table, stanley_reisner_complex, z2_homology


class CheckFailure(Exception):
    """An asserted equality or trend did not hold."""


# ---------------------------------------------------------------------------
# small shared helpers

def _emit(out_path, text: str) -> None:
    if out_path:
        atomic_write(out_path, text)
    else:
        sys.stdout.write(text)


def _fraction_list(text: str) -> tuple:
    return tuple(parse_probability(t.strip()) for t in text.split(","))


def _int_list(text: str) -> tuple:
    return tuple(int(t.strip()) for t in text.split(","))


def _float_prob(text: str) -> float:
    """Probability for numeric paths; accepts decimals and 'a/b'."""
    try:
        p = float(text)
    except ValueError:
        p = float(Fraction(text))
    if not 0 <= p <= 1:
        raise ValueError(f"probability {text} outside [0, 1]")
    return p


def _exact_prob(text: str) -> Fraction:
    """Probability for exact paths: 'a/b' or an integer, never decimal notation."""
    if "." in text:
        raise ValueError(
            f"exact computations take rational probabilities like 1/3, got {text!r}"
        )
    return parse_probability(text)


def _exact_prob_list(text: str) -> tuple:
    return tuple(_exact_prob(t.strip()) for t in text.split(","))


def format_complex(Y) -> str:
    """Facet notation, e.g. '{1,2} {3}'; '{}' is the empty complex."""
    if Y.is_void:
        return "(void)"
    facets = [f for f in Y.faces if f and not any(f < g for g in Y.faces)]
    if not facets:
        return "{}"
    facets.sort(key=lambda s: (len(s), sorted(s)))
    return " ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in facets)


def _load_ideal(spec: str, n, D):
    """Resolve --ideal: a file in the ideal text format, or a named ideal.

    Named forms ('zero', 'zero.ideal', 'maximal') need --n and --D.
    Returns (ideal, D).
    """
    if os.path.isfile(spec):
        with open(spec) as f:
            ideal, file_D = parse_ideal(f.read())
        if n is not None and n != ideal.n:
            raise ValueError(f"--n {n} contradicts the file ({ideal.n} variables)")
        if D is not None and D != file_D:
            raise ValueError(f"--D {D} contradicts the file (degree cap {file_D})")
        return ideal, file_D
    token = spec.lower()
    if token in ("zero", "zero.ideal", "0"):
        if n is None or D is None:
            raise ValueError("a named ideal needs --n and --D")
        return zero_ideal(n), D
    if token in ("maximal", "maximal.ideal", "max"):
        if n is None or D is None:
            raise ValueError("a named ideal needs --n and --D")
        return maximal_ideal(n), D
    raise ValueError(f"no ideal file {spec!r} (named ideals: zero, maximal)")


# ---------------------------------------------------------------------------
# subcommands

def cmd_sample(args) -> int:
    seed = Seed(args.seed, args.stream)
    lines = ["# randmono-samples-v1"]
    if args.model == "cf":
        if args.r is None or not args.p_tilde:
            raise ValueError("the cf model needs --r and --p-tilde")
        cf = CFParams(args.n, args.r, _fraction_list(args.p_tilde))
        lines.append(
            f"# model=cf n={args.n} r={args.r} p_tilde={args.p_tilde}"
            f" count={args.count} seed={args.seed}/{args.stream}"
        )
        for i in range(args.count):
            lines.append(f"{i}: {format_complex(sample_cf_complex(cf, seed, i))}")
        _emit(args.out, "\n".join(lines) + "\n")
        return 0

    if args.D is None:
        raise ValueError("monomial models need --D")
    if args.model in ("er", "squarefree") and args.p is None:
        raise ValueError(f"the {args.model} model needs --p")
    if args.model == "er":
        params = ERParams(args.n, args.D, parse_probability(args.p))
        sampler = sample_er
    elif args.model == "graded":
        if not args.p_by_degree:
            raise ValueError("the graded model needs --p-by-degree")
        params = GradedParams(args.n, args.D, _fraction_list(args.p_by_degree))
        sampler = sample_graded
    elif args.model == "squarefree":
        params = squarefree_params(args.n, args.D, parse_probability(args.p))
        sampler = sample_general
    else:
        raise ValueError(f"unknown model {args.model!r}")
    p_note = args.p_by_degree if args.model == "graded" else str(Fraction(args.p))
    lines.append(
        f"# model={args.model} n={args.n} D={args.D} p={p_note}"
        f" count={args.count} seed={args.seed}/{args.stream}"
    )
    for i in range(args.count):
        B, ideal = sampler(params, seed, i)
        lines.append(f"{i}: |B|={len(B)} {ideal}")
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_exact_prob(args) -> int:
    ideal, D = _load_ideal(args.ideal, args.n, args.D)
    if args.p_by_degree:
        val = prob_ideal_graded(ideal, GradedParams(ideal.n, D, _exact_prob_list(args.p_by_degree)))
    else:
        if args.p is None:
            raise ValueError("pass --p or --p-by-degree")
        val = prob_ideal_er(ideal, ERParams(ideal.n, D, _exact_prob(args.p)))
    print(val)
    return 0


def _dim_prob(params: ERParams, t: int, method: str) -> Fraction:
    if method == "oracle":
        dist = brute_force_distribution(params)
        return sum(
            (q for I, q in dist.items() if krull_dimension(I) == t), Fraction(0)
        )
    if method == "auto":
        try:
            return krull_dim_distribution(params, t, method="closed_form")
        except ValueError:
            return krull_dim_distribution(params, t, method="clutter_sum")
    return krull_dim_distribution(params, t, method=method)


def cmd_dim_dist(args) -> int:
    params = ERParams(args.n, args.D, _exact_prob(args.p))
    if not args.all and args.t is None:
        raise ValueError("pass --t or --all")
    ts = range(args.n + 1) if args.all else [args.t]
    total = Fraction(0)
    for t in ts:
        val = _dim_prob(params, t, args.method)
        total += val
        print(f"dim={t}: {val}")
    if args.all:
        print(f"total: {total}")
        if total != 1:
            raise CheckFailure("dimension probabilities do not sum to 1")
    return 0


def cmd_hilbert_dist(args) -> int:
    params = ERParams(args.n, args.D, _exact_prob(args.p))
    if args.h:
        print(prob_hilbert(params, _int_list(args.h)))
        return 0
    census = enumerate_monomial_ideals(args.n, args.D)
    total = Fraction(0)
    for h in sorted(census.by_hilbert()):
        val = prob_hilbert(params, h)
        total += val
        print(f"h={','.join(map(str, h))}: {val}")
    print(f"total: {total}")
    if total != 1:
        raise CheckFailure("Hilbert function probabilities do not sum to 1")
    return 0


def cmd_nmon(args) -> int:
    h = _int_list(args.h)
    if args.bounds:
        print(",".join(map(str, lex_betti_bounds(h, args.n, args.D))))
        return 0
    if not args.beta:
        raise ValueError("pass --beta, or --bounds for the attainable range")
    print(nmon(args.n, args.D, h, _int_list(args.beta)))
    return 0


def cmd_census(args) -> int:
    census = enumerate_monomial_ideals(args.n, args.D)
    lines = [
        "# randmono-census-v1",
        f"n={args.n} D={args.D} total={len(census.ideals)}",
    ]
    by_h = census.by_hilbert()
    for h in sorted(by_h):
        if args.betti:
            groups: dict = {}
            for I in by_h[h]:
                groups[I.graded_betti1(args.D)] = groups.get(I.graded_betti1(args.D), 0) + 1
            for beta in sorted(groups):
                lines.append(
                    f"h={','.join(map(str, h))}"
                    f" beta={','.join(map(str, beta))} count={groups[beta]}"
                )
        else:
            lines.append(f"h={','.join(map(str, h))} count={len(by_h[h])}")
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_expected_gens(args) -> int:
    p = _float_prob(args.p)
    sv = expected_beta1_limit(args.n, p, args.eps)
    print(f"E[beta1] limit: {sv.value!r}")
    print(f"tail bound: {sv.tail_bound!r} after {sv.terms} terms")
    if args.bounds:
        lo, hi = beta1_limit_bounds(args.n, p)
        print(f"bounds: [{lo!r}, {hi!r}]")
        if not lo <= sv.value <= hi:
            raise CheckFailure("series value escapes its sandwich bounds")
    if args.compare:
        if args.n != 2:
            raise ValueError("--compare rests on a two-variable identity")
        lam = expected_beta1_2vars_lambert(p, args.eps)
        print(f"lambert form: {lam.value!r} (difference {abs(lam.value - sv.value)!r})")
    return 0


def cmd_homology(args) -> int:
    ideal, _D = _load_ideal(args.ideal, args.n, args.D)
    if ideal.is_zero:
        raise ValueError("the zero ideal has no face complex here; pass a nonzero ideal")
    if not ideal.is_squarefree:
        if not args.radical:
            raise ValueError("ideal is not squarefree; pass --radical to reduce it first")
        ideal = ideal.radical()
    Y = stanley_reisner_complex(ideal)
    betti = z2_homology(Y)
    print(f"# reduced Z2 Betti numbers, face complex on {ideal.n} vertices")
    print(f"# complex: {format_complex(Y)}")
    for i, b in enumerate(betti):
        print(f"b{i} = {b}")
    return 0


def cmd_cf_check(args) -> int:
    cf = CFParams(args.n, args.r, _exact_prob_list(args.p_tilde))
    rows = cf_distribution_table(cf)
    bad = 0
    for Y, p_model, p_ideal in rows:
        marker = "" if p_model == p_ideal else "  MISMATCH"
        bad += p_model != p_ideal
        print(f"{str(p_model):>12}  {str(p_ideal):>12}  {format_complex(Y)}{marker}")
    total_model = sum(r[1] for r in rows)
    total_ideal = sum(r[2] for r in rows)
    print(f"total: {total_model} (complex side), {total_ideal} (ideal side)")
    if bad or total_model != 1 or total_ideal != 1:
        raise CheckFailure(
            f"{bad} rows disagree; totals {total_model} and {total_ideal}"
        )
    print(f"OK: {len(rows)} complexes, both constructions agree, mass 1")
    return 0


def cmd_oracle(args) -> int:
    if args.p_by_degree:
        params = GradedParams(args.n, args.D, _exact_prob_list(args.p_by_degree))
        p_note = [str(q) for q in params.p_by_degree]
        model = "graded"
    else:
        if args.p is None:
            raise ValueError("pass --p or --p-by-degree")
        params = ERParams(args.n, args.D, _exact_prob(args.p))
        p_note = str(params.p)
        model = "uniform"
    dist = brute_force_distribution(params)
    payload = {
        "format": "randmono-oracle-v1",
        "model": model,
        "n": args.n,
        "D": args.D,
        "p": p_note,
        "ideals": len(dist),
        "distribution": {str(I): str(q) for I, q in dist.items()},
    }
    _emit(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


# ---------------------------------------------------------------------------
# sweep: config file + overrides

_SWEEP_KEYS = {
    "model", "n", "D", "N", "seed", "properties", "p_grid", "p_count",
    "jobs", "figure", "title", "trend",
}


def parse_config(text: str) -> dict:
    """Flat key = value lines; # comments; optional quotes around values."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if "=" not in s:
            raise ValueError(f"config line {lineno}: expected key = value")
        k, v = s.split("=", 1)
        k, v = k.strip(), v.strip()
        if len(v) >= 2 and v[0] == v[-1] and v[0] in "'\"":
            v = v[1:-1]
        if k not in _SWEEP_KEYS:
            raise ValueError(f"config line {lineno}: unknown key {k!r}")
        out[k] = v
    return out


def _bool_setting(value: str) -> bool:
    if value.lower() in ("1", "true", "yes", "on"):
        return True
    if value.lower() in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {value!r}")


def cmd_sweep(args) -> int:
    cfg: dict = {}
    if args.config:
        with open(args.config) as f:
            cfg = parse_config(f.read())
    # command line wins over the file
    for key in ("model", "n", "D", "N", "seed", "properties", "p_grid", "p_count",
                "jobs", "title", "trend"):
        v = getattr(args, key, None)
        if v is not None:
            cfg[key] = v
    if args.svg:
        cfg["figure"] = "true"

    missing = [k for k in ("n", "D", "properties") if k not in cfg]
    if missing:
        raise ValueError(f"sweep needs {', '.join(missing)} (config file or flags)")
    n, D = int(cfg["n"]), int(cfg["D"])
    N = int(cfg.get("N", 1000))
    seed = int(cfg.get("seed", 0))
    jobs = int(cfg.get("jobs", 1))
    model = cfg.get("model", "uniform")
    props = tuple(t.strip() for t in str(cfg["properties"]).split(",") if t.strip())
    if "p_grid" in cfg:
        grid = tuple(float(t) for t in str(cfg["p_grid"]).split(","))
    else:
        grid = default_p_grid(n, D, int(cfg.get("p_count", 20)))
    trend = cfg.get("trend")
    if trend is not None and trend not in ("increasing", "decreasing"):
        raise ValueError("trend must be 'increasing' or 'decreasing'")

    spec = SweepSpec(
        model=model, n=n, D=D, properties=props, p_grid=grid,
        N=N, master_seed=seed, jobs=jobs,
    )
    records = run_sweep(spec)

    os.makedirs(args.out_dir, exist_ok=True)
    csv_path = os.path.join(args.out_dir, "sweep.csv")
    json_path = os.path.join(args.out_dir, "sweep.json")
    atomic_write(csv_path, records_to_csv(records))
    atomic_write(json_path, records_to_json(records))
    written = [csv_path, json_path]
    if "figure" in cfg and _bool_setting(str(cfg["figure"])):
        svg_path = os.path.join(args.out_dir, "sweep.svg")
        render_figure(records, svg_path, title=str(cfg.get("title", "")))
        written.append(svg_path)
    for path in written:
        print(f"wrote {path}")

    if args.check:
        if trend is None:
            raise ValueError("--check needs a trend setting (config or --trend)")
        failures = []
        for prop in props:
            rows = sorted((r for r in records if r.property == prop), key=lambda r: r.p)
            freqs = [r.freq for r in rows]
            ok = (
                all(a <= b for a, b in zip(freqs, freqs[1:]))
                if trend == "increasing"
                else all(a >= b for a, b in zip(freqs, freqs[1:]))
            )
            if not ok:
                failures.append(prop)
                print(f"CHECK FAIL: {prop!r} is not {trend} along the p grid")
        if failures:
            raise CheckFailure(f"{len(failures)} properties broke the {trend} trend")
        print("CHECK OK")
    return 0


# ---------------------------------------------------------------------------
# parser plumbing

def _add_np(sp, n_required: bool = True) -> None:
    sp.add_argument("--n", type=int, required=n_required, help="number of variables")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="randmono",
        description="Random monomial ideals: samplers, exact distributions, experiments.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("sample", help="draw ideals (or complexes) from a model")
    sp.add_argument("--model", default="er",
                    choices=("er", "graded", "squarefree", "cf"))
    _add_np(sp)
    sp.add_argument("--D", type=int, help="degree cap")
    sp.add_argument("--p", help="inclusion probability (decimal or a/b)")
    sp.add_argument("--p-by-degree", help="comma list of per-degree probabilities")
    sp.add_argument("--r", type=int, help="top face dimension (cf model)")
    sp.add_argument("--p-tilde", help="comma list of face survival probabilities (cf)")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--stream", type=int, default=0)
    sp.add_argument("--out", help="write here instead of stdout")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("exact-prob", help="exact probability of hitting a given ideal")
    sp.add_argument("--ideal", required=True,
                    help="ideal file, or a named ideal (zero, maximal)")
    _add_np(sp, n_required=False)
    sp.add_argument("--D", type=int)
    sp.add_argument("--p", help="rational probability a/b")
    sp.add_argument("--p-by-degree", help="per-degree probabilities (graded model)")
    sp.set_defaults(func=cmd_exact_prob)

    sp = sub.add_parser("dim-dist", help="distribution of the Krull dimension")
    _add_np(sp)
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--t", type=int, help="dimension of interest")
    sp.add_argument("--all", action="store_true", help="every t from 0 to n")
    sp.add_argument("--method", default="auto",
                    choices=("auto", "closed_form", "clutter_sum", "oracle"))
    sp.set_defaults(func=cmd_dim_dist)

    sp = sub.add_parser("hilbert-dist", help="distribution of the Hilbert function")
    _add_np(sp)
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--h", help="comma Hilbert vector h(1),...,h(D)")
    sp.add_argument("--all", action="store_true", help="every attainable vector")
    sp.set_defaults(func=cmd_hilbert_dist)

    sp = sub.add_parser("nmon", help="count ideals with a given Hilbert/Betti pattern")
    _add_np(sp)
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--h", required=True, help="comma Hilbert vector")
    sp.add_argument("--beta", help="comma graded generator counts")
    sp.add_argument("--bounds", action="store_true",
                    help="print the attainable generator-count bounds instead")
    sp.set_defaults(func=cmd_nmon)

    sp = sub.add_parser("census", help="enumerate every ideal generated up to degree D")
    _add_np(sp)
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--betti", action="store_true", help="split counts by Betti pattern")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("expected-gens",
                        help="large-D limit of the expected number of generators")
    _add_np(sp)
    sp.add_argument("--p", required=True)
    sp.add_argument("--eps", type=float, default=1e-9, help="series tail tolerance")
    sp.add_argument("--bounds", action="store_true", help="also print sandwich bounds")
    sp.add_argument("--compare", action="store_true",
                    help="also evaluate the two-variable closed form")
    sp.set_defaults(func=cmd_expected_gens)

    sp = sub.add_parser("homology", help="reduced Z2 homology of the face complex")
    sp.add_argument("--ideal", required=True)
    _add_np(sp, n_required=False)
    sp.add_argument("--D", type=int)
    sp.add_argument("--radical", action="store_true",
                    help="replace the ideal by its radical first")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("cf-check",
                        help="hierarchical complex distribution, computed two ways")
    _add_np(sp)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p-tilde", required=True,
                    help="comma survival probabilities for dimensions 0..r")
    sp.set_defaults(func=cmd_cf_check)

    sp = sub.add_parser("sweep", help="Monte Carlo property frequencies over a p grid")
    sp.add_argument("--config", help="flat key = value file")
    sp.add_argument("--out-dir", default=".")
    sp.add_argument("--model", choices=("uniform", "squarefree"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--D", type=int)
    sp.add_argument("--N", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--properties", help="comma list, e.g. 'dim<=0,zero-ideal'")
    sp.add_argument("--p-grid", dest="p_grid", help="comma list of probabilities")
    sp.add_argument("--p-count", dest="p_count", type=int, help="grid size (default 20)")
    sp.add_argument("--jobs", type=int)
    sp.add_argument("--svg", action="store_true", help="also render sweep.svg")
    sp.add_argument("--title")
    sp.add_argument("--trend", choices=("increasing", "decreasing"))
    sp.add_argument("--check", action="store_true",
                    help="fail (exit 1) unless every property follows the trend")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("oracle", help="exact distribution by full enumeration")
    _add_np(sp)
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--p", help="rational probability a/b")
    sp.add_argument("--p-by-degree")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_oracle)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except CheckFailure as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
