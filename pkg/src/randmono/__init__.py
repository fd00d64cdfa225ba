"""Random monomial ideals: samplers, exact distributions, and experiments.

The package studies monomial ideals drawn at random from the non-constant
monomials of degree at most D in n variables.  Each monomial enters the
generating set independently, with a shared probability p (uniform model),
a per-degree probability (graded model), or a per-monomial probability
(general model, which also covers square-free restrictions and the
Costa-Farber complex construction via Stanley-Reisner duality).

Exact probabilities are computed in rational arithmetic and cross-checked
against a full 2^M enumeration oracle; Monte Carlo experiments reproduce
threshold behaviour of Krull dimension, initial degree, and homology.
"""

from .core import (
    GuardError,
    Monomial,
    MonomialIdeal,
    ZeroIdealError,
    count_monomials_exact,
    count_monomials_up_to,
    degree,
    divides,
    enumerate_monomials,
    format_ideal,
    grlex_key,
    is_squarefree,
    maximal_ideal,
    minimalize,
    monomials_of_degree,
    monomials_up_to,
    parse_ideal,
    parse_probability,
    squarefree_part,
    support,
    zero_ideal,
)
from .exact import (
    ERParams,
    GeneralParams,
    GradedParams,
    Hypergraph,
    brute_force_distribution,
    enumerate_clutters,
    krull_dim_distribution,
    krull_dimension,
    min_edges,
    monomials_with_support_count,
    prob_ideal_er,
    prob_ideal_general,
    prob_ideal_graded,
    support_hypergraph,
    transversal_number,
)
from .counting import (
    IdealCensus,
    UnattainableHilbertError,
    enumerate_monomial_ideals,
    is_attainable_hilbert,
    lex_betti_bounds,
    lex_segment_ideal,
    nmon,
    prob_hilbert,
)
from .asymptotics import (
    SeriesValue,
    beta1_limit_bounds,
    expected_beta1_2vars_lambert,
    expected_beta1_limit,
    polylog_neg,
    stirling2,
    tau,
    tau_table,
)
from .topology import (
    CFParams,
    SimplicialComplex,
    all_complexes,
    cf_distribution_table,
    cf_parameters,
    cf_probability,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    z2_homology,
)
from .sampling import (
    Seed,
    cf_complex_from_coins,
    rng_for_sample,
    sample_cf_complex,
    sample_er,
    sample_general,
    sample_graded,
    sample_space,
    squarefree_params,
)
from .experiments import (
    CriticalRegionRecord,
    EstimateRecord,
    SweepSpec,
    ThresholdReport,
    atomic_write,
    critical_region_check,
    default_p_grid,
    estimate,
    expected_set_size,
    records_to_csv,
    records_to_json,
    render_figure,
    sweep,
    threshold_check,
    wilson_interval,
)

__version__ = "0.1.0"

__all__ = [
    "CFParams",
    "CriticalRegionRecord",
    "ERParams",
    "EstimateRecord",
    "GeneralParams",
    "GradedParams",
    "GuardError",
    "Hypergraph",
    "IdealCensus",
    "Monomial",
    "MonomialIdeal",
    "Seed",
    "SeriesValue",
    "SimplicialComplex",
    "SweepSpec",
    "ThresholdReport",
    "UnattainableHilbertError",
    "ZeroIdealError",
    "all_complexes",
    "atomic_write",
    "beta1_limit_bounds",
    "brute_force_distribution",
    "cf_complex_from_coins",
    "cf_distribution_table",
    "cf_parameters",
    "cf_probability",
    "count_monomials_exact",
    "count_monomials_up_to",
    "critical_region_check",
    "default_p_grid",
    "degree",
    "divides",
    "enumerate_clutters",
    "enumerate_monomial_ideals",
    "enumerate_monomials",
    "estimate",
    "expected_beta1_2vars_lambert",
    "expected_beta1_limit",
    "expected_set_size",
    "format_ideal",
    "grlex_key",
    "is_attainable_hilbert",
    "is_squarefree",
    "krull_dim_distribution",
    "krull_dimension",
    "lex_betti_bounds",
    "lex_segment_ideal",
    "maximal_ideal",
    "min_edges",
    "minimalize",
    "monomials_of_degree",
    "monomials_up_to",
    "monomials_with_support_count",
    "nmon",
    "parse_ideal",
    "parse_probability",
    "polylog_neg",
    "prob_hilbert",
    "prob_ideal_er",
    "prob_ideal_general",
    "prob_ideal_graded",
    "records_to_csv",
    "records_to_json",
    "render_figure",
    "rng_for_sample",
    "sample_cf_complex",
    "sample_er",
    "sample_general",
    "sample_graded",
    "sample_space",
    "squarefree_params",
    "squarefree_part",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "stirling2",
    "support",
    "support_hypergraph",
    "sweep",
    "tau",
    "tau_table",
    "threshold_check",
    "transversal_number",
    "wilson_interval",
    "z2_homology",
    "zero_ideal",
]
