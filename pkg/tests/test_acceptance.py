"""End-to-end acceptance checks.

Each test exercises one acceptance target across module boundaries and
prints a single PASS/FAIL line, so running this file with -s (or -v)
doubles as a checklist.  Exact claims use rational arithmetic with zero
tolerance; Monte Carlo claims state their seeds and statistical margins
inline.  Wall-clock budgets that are part of the target are asserted
with time.monotonic().
"""

import functools
import math
import time
from fractions import Fraction

from randmono import (
    CFParams,
    ERParams,
    MonomialIdeal,
    SimplicialComplex,
    SweepSpec,
    beta1_limit_bounds,
    brute_force_distribution,
    cf_distribution_table,
    critical_region_check,
    default_p_grid,
    enumerate_monomial_ideals,
    estimate,
    expected_beta1_2vars_lambert,
    expected_beta1_limit,
    expected_set_size,
    krull_dim_distribution,
    krull_dimension,
    lex_betti_bounds,
    nmon,
    polylog_neg,
    prob_ideal_er,
    prob_hilbert,
    records_to_csv,
    sweep,
    tau,
    threshold_check,
    z2_homology,
)
from randmono.sampling import Seed

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


def criterion(num, label):
    """Print one PASS/FAIL line per acceptance target."""

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {num:02d} FAIL  {label}")
                raise
            print(f"criterion {num:02d} PASS  {label}")

        return wrapper

    return deco


@criterion(1, "formula matches the brute-force distribution exactly")
def test_criterion_01_oracle_equivalence():
    start = time.monotonic()
    for n, D in ((1, 3), (2, 2), (2, 3), (3, 2)):
        for p in (THIRD, HALF, Fraction(3, 4)):
            params = ERParams(n, D, p)
            dist = brute_force_distribution(params)
            assert sum(dist.values()) == 1
            for ideal, mass in dist.items():
                assert prob_ideal_er(ideal, params) == mass, (n, D, p, ideal)
    assert time.monotonic() - start < 60


@criterion(2, "principal-ideal exponent and the most probable principals")
def test_criterion_02_principal_ideals():
    for D in (3, 4, 5):
        for a in range(D + 1):
            for g in range(D - a + 1):
                if a + g == 0:
                    continue
                ideal = MonomialIdeal(2, ((a, g),))
                # each product is even: g and 2D-g+3 have opposite parity
                expo = g * (2 * D - g + 3) // 2 + a * (2 * D - a + 3) // 2 - a * g - 1
                assert expo == ideal.standard_count(D), (D, a, g)

        params = ERParams(2, D, Fraction(1, 4))
        principals = [
            MonomialIdeal(2, ((a, g),))
            for a in range(D + 1)
            for g in range(D - a + 1)
            if a + g >= 1
        ]
        best = max(prob_ideal_er(I, params) for I in principals)
        winners = {I for I in principals if prob_ideal_er(I, params) == best}
        assert winners == {MonomialIdeal(2, ((1, 0),)), MonomialIdeal(2, ((0, 1),))}


@criterion(3, "Krull dimension: closed forms = clutter sums = oracle")
def test_criterion_03_krull_distribution():
    start = time.monotonic()
    for n in (1, 2, 3):
        for D in (1, 2, 3):
            for p in (THIRD, HALF):
                params = ERParams(n, D, p)
                dist = brute_force_distribution(params)
                for t in range(n + 1):
                    oracle = sum(
                        mass for I, mass in dist.items() if krull_dimension(I) == t
                    )
                    assert oracle == krull_dim_distribution(params, t, "clutter_sum")
                    assert oracle == krull_dim_distribution(params, t, "closed_form")
    # n = 4: the four closed forms plus the t = 2 clutter sum carry all mass
    for D in (2, 3):
        for p in (THIRD, HALF):
            params = ERParams(4, D, p)
            total = sum(
                krull_dim_distribution(params, t, "closed_form") for t in (0, 1, 3, 4)
            )
            total += krull_dim_distribution(params, 2, "clutter_sum")
            assert total == 1, (D, p)
    assert time.monotonic() - start < 300


@criterion(4, "Hilbert-function distribution and per-stratum ideal counts")
def test_criterion_04_hilbert_distribution():
    for n, D in ((2, 2), (2, 3), (3, 2)):
        census = enumerate_monomial_ideals(n, D)
        by_h = census.by_hilbert()
        for p in (THIRD, HALF):
            params = ERParams(n, D, p)
            total = Fraction(0)
            for h, ideals in by_h.items():
                mass = sum(prob_ideal_er(I, params) for I in ideals)
                assert prob_hilbert(params, h) == mass, (n, D, p, h)
                total += mass
            assert total == 1

        by_stratum = {}
        for I in census.ideals:
            key = (I.hilbert_vector(D), I.graded_betti1(D))
            by_stratum.setdefault(key, []).append(I)
        for (h, beta), ideals in by_stratum.items():
            assert nmon(n, D, h, beta) == len(ideals), (n, D, h, beta)


@criterion(5, "lex-segment Betti numbers dominate the whole census")
def test_criterion_05_lex_bounds_dominate():
    for n, D in ((2, 3), (3, 2)):
        census = enumerate_monomial_ideals(n, D)
        violations = []
        for I in census.ideals:
            bound = lex_betti_bounds(I.hilbert_vector(D), n, D)
            actual = I.graded_betti1(D)
            if any(a > b for a, b in zip(actual, bound)):
                violations.append(I)
        assert violations == []


@criterion(6, "expected generator counts: limit, Lambert, sandwich, polylog")
def test_criterion_06_expected_generators():
    assert 11 <= expected_beta1_limit(2, 1e-5).value <= 13

    for p in (0.1, 0.01):
        series = expected_beta1_limit(2, p, 1e-12).value
        lambert = expected_beta1_2vars_lambert(p, 1e-12).value
        assert abs(series - lambert) < 1e-9, p

    # the partial sum underestimates, so bracket with its tail bound
    for n in (1, 2, 3, 4):
        for p in (0.5, 0.1, 0.01):
            lo, hi = beta1_limit_bounds(n, p)
            sv = expected_beta1_limit(n, p, 1e-8)
            assert sv.value + sv.tail_bound >= lo, (n, p)
            assert sv.value <= hi, (n, p)

    assert tau(3, 4) == 6

    for n in (1, 2, 3, 4):
        for x in (0.1, 0.5, 0.9):
            direct = 0.0
            k = 1
            while True:
                term = k**n * x**k
                direct += term
                if term < 1e-16:
                    break
                k += 1
            assert abs(polylog_neg(n, x) - direct) < 1e-9, (n, x)


@criterion(7, "hierarchical complex model agrees with the per-monomial product")
def test_criterion_07_hierarchical_equivalence():
    rows = cf_distribution_table(CFParams(2, 1, (Fraction(3, 10), Fraction(3, 5))))
    assert len(rows) == 5
    table = {}
    for Y, p_model, p_ideal in rows:
        assert p_model == p_ideal
        table[tuple(sorted(tuple(sorted(f)) for f in Y.faces if f))] = p_model
    assert sum(table.values()) == 1
    assert table[()] == Fraction(49, 100)
    assert table[((1,),)] == Fraction(21, 100)
    assert table[((2,),)] == Fraction(21, 100)
    assert table[((1,), (2,))] == Fraction(9, 250)
    assert table[((1,), (1, 2), (2,))] == Fraction(27, 500)

    rows = cf_distribution_table(
        CFParams(3, 2, (Fraction(2, 3), Fraction(1, 2), Fraction(2, 5)))
    )
    assert all(p_model == p_ideal for _, p_model, p_ideal in rows)
    assert sum(p_model for _, p_model, _ in rows) == 1


@criterion(8, "Monte Carlo agrees with exact values and reproduces byte-exactly")
def test_criterion_08_monte_carlo():
    start = time.monotonic()
    params = ERParams(2, 2, HALF)
    N = 100_000

    checks = (
        ("zero-ideal", Seed(2026), Fraction(1, 32)),
        ("dim=0", Seed(2026, 1), Fraction(9, 16)),
    )
    first_pass = []
    for prop, seed, target in checks:
        rec = estimate(prop, params, N, seed)
        sigma = math.sqrt(float(target) * float(1 - target) / N)
        assert abs(rec.freq - float(target)) <= 3 * sigma, (prop, rec.freq)
        first_pass.append(rec)

    second_pass = [estimate(prop, params, N, seed) for prop, seed, _ in checks]
    assert records_to_csv(first_pass) == records_to_csv(second_pass)
    assert time.monotonic() - start < 60


@criterion(9, "threshold trends at desk scale")
def test_criterion_09_threshold_trends():
    start = time.monotonic()
    N = 2000

    def er_grid(n, Ds, expo):
        return [
            ERParams(n, D, Fraction(D**expo).limit_denominator(10**12)) for D in Ds
        ]

    # dim <= 0 at n = 3: dies below the D^-1 threshold, certain above it
    report = threshold_check("dim<=0", er_grid(3, (10, 40, 160), -1.5), N, Seed(77), jobs=4)
    assert report.decreasing and report.rows[-1].freq < 0.2
    report = threshold_check("dim<=0", er_grid(3, (10, 40, 160), -0.5), N, Seed(78), jobs=4)
    assert report.increasing and report.rows[-1].freq > 0.8

    # zero ideal at n = 2: threshold D^-n = D^-2
    report = threshold_check("zero-ideal", er_grid(2, (10, 40, 160), -2.5), N, Seed(79), jobs=4)
    assert report.increasing and report.rows[-1].freq > 0.8
    report = threshold_check("zero-ideal", er_grid(2, (10, 40, 160), -1.5), N, Seed(80), jobs=4)
    assert report.decreasing and report.rows[-1].freq < 0.2

    # initial degree: P(initdeg <= 3) climbs through the band around 3^-n
    band = [ERParams(3, 30, p) for p in (Fraction(1, 216), Fraction(1, 27), Fraction(8, 27))]
    report = threshold_check("initdeg<=3", band, N, Seed(81), jobs=4)
    assert report.increasing
    assert report.rows[0].freq < 0.2 and report.rows[-1].freq > 0.8

    assert time.monotonic() - start < 600


@criterion(10, "homology: fixed values and unimodal frequency curves")
def test_criterion_10_homology():
    hollow = SimplicialComplex.from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert z2_homology(hollow) == (0, 1, 0)
    assert z2_homology(SimplicialComplex.from_facets(2, [(1,), (2,)])) == (1, 0)
    assert z2_homology(SimplicialComplex.from_facets(3, [(1, 2, 3)])) == (0, 0, 0)

    spec = SweepSpec(
        model="uniform",
        n=5,
        D=4,
        properties=("hom0!=0", "hom1!=0", "hom2!=0"),
        p_grid=default_p_grid(5, 4, 20),
        N=500,
        master_seed=101,
        jobs=4,
    )
    records = sweep(spec)
    peak_ps = []
    for prop in spec.properties:
        rows = [r for r in records if r.property == prop]
        peak = max(rows, key=lambda r: r.freq)
        # a hump, not a monotone curve: the peak beats both endpoints
        assert peak.freq > rows[0].freq and peak.freq > rows[-1].freq, prop
        peak_ps.append(peak.p)
    assert peak_ps[0] > peak_ps[1] > peak_ps[2]


@criterion(11, "critical region: unit mean, variance note, bounded means")
def test_criterion_11_critical_region():
    for n, D in ((2, 2), (3, 2), (2, 3)):
        rec = critical_region_check(n, D)
        assert rec.p == Fraction(1, rec.M)
        assert rec.expected_size == 1
        assert rec.variance == 1 - rec.p
        assert "1 - p" in rec.note

    means = []
    for n in range(2, 9):
        params = ERParams(n, 3, Fraction(1, n**3))
        means.append(expected_set_size(params))
    k1, k2 = Fraction(1, 8), Fraction(3, 2)
    assert all(k1 <= m <= k2 for m in means)
