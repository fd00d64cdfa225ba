"""Simplicial complexes, face-ring duality, GF(2) homology, and the
hierarchical complex model."""

from fractions import Fraction

import pytest

from randmono.core import GuardError, maximal_ideal, minimalize, zero_ideal
from randmono.topology import (
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


def complex_of(n, *facets):
    return SimplicialComplex.from_facets(n, facets)


# ---------------------------------------------------------------------------
# the complex type

def test_faces_must_be_downward_closed():
    with pytest.raises(ValueError):
        SimplicialComplex(2, frozenset({frozenset(), frozenset({1, 2})}))
    with pytest.raises(ValueError):
        SimplicialComplex(2, frozenset({frozenset({1})}))  # missing empty face
    with pytest.raises(ValueError):
        SimplicialComplex(1, frozenset({frozenset(), frozenset({2})}))


def test_from_facets_closes_downward():
    Y = complex_of(3, {1, 2, 3})
    assert len(Y.faces) == 8
    assert Y.dim() == 2
    assert Y.f_vector() == (3, 3, 1)


def test_void_versus_empty():
    void = SimplicialComplex(2, frozenset())
    empty = SimplicialComplex(2, frozenset({frozenset()}))
    assert void.is_void and not empty.is_void
    assert empty.dim() == -1
    with pytest.raises(ValueError):
        void.dim()


def test_minimal_nonfaces_of_hollow_triangle():
    Y = complex_of(3, {1, 2}, {2, 3}, {1, 3})
    assert Y.minimal_nonfaces() == (frozenset({1, 2, 3}),)


# ---------------------------------------------------------------------------
# duality

def test_squarefree_dictionary_fixed_rows():
    assert stanley_reisner_complex(minimalize(2, [(1, 1)])).faces == frozenset(
        {frozenset(), frozenset({1}), frozenset({2})}
    )
    assert stanley_reisner_complex(zero_ideal(2)) == complex_of(2, {1, 2})
    assert stanley_reisner_complex(maximal_ideal(2)).faces == frozenset({frozenset()})
    assert stanley_reisner_ideal(complex_of(2, {1, 2})).is_zero
    assert stanley_reisner_ideal(
        SimplicialComplex(2, frozenset({frozenset(), frozenset({1})}))
    ) == minimalize(2, [(0, 1)])


def test_dictionary_requires_squarefree_generators():
    with pytest.raises(ValueError):
        stanley_reisner_complex(minimalize(2, [(2, 0)]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dictionary_is_a_bijection(n):
    for Y in all_complexes(n):
        assert stanley_reisner_complex(stanley_reisner_ideal(Y)) == Y


def test_complex_counts():
    # non-void complexes on a labeled vertex set
    assert len(all_complexes(1)) == 2
    assert len(all_complexes(2)) == 5
    assert len(all_complexes(3)) == 19
    assert len(all_complexes(4)) == 167
    with pytest.raises(GuardError):
        all_complexes(5)


# ---------------------------------------------------------------------------
# homology

def test_hollow_triangle_has_one_loop():
    Y = complex_of(3, {1, 2}, {2, 3}, {1, 3})
    assert z2_homology(Y) == (0, 1, 0)


def test_two_points_have_one_extra_component():
    Y = complex_of(2, {1}, {2})
    assert z2_homology(Y) == (1, 0)


def test_full_simplex_is_contractible():
    for n in (1, 2, 3, 4):
        assert z2_homology(complex_of(n, set(range(1, n + 1)))) == (0,) * n


def test_empty_complex_has_no_reduced_homology():
    # the empty face alone: the (-1)-cell kills the augmentation
    Y = SimplicialComplex(2, frozenset({frozenset()}))
    assert z2_homology(Y) == (0, 0)


def test_hollow_tetrahedron_is_a_two_sphere():
    Y = complex_of(4, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4})
    assert z2_homology(Y) == (0, 0, 1, 0)


def test_disjoint_edge_and_point():
    Y = complex_of(3, {1, 2}, {3})
    assert z2_homology(Y) == (1, 0, 0)


# ---------------------------------------------------------------------------
# hierarchical complex model

def test_cf_params_validation():
    CFParams(3, 1, (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError):
        CFParams(3, 3, (1, 1, 1, 1))  # r must stay below n
    with pytest.raises(ValueError):
        CFParams(3, 1, (Fraction(1, 2),))  # one probability per dimension


def test_cf_parameters_dictionary():
    cf = CFParams(2, 1, (Fraction(7, 10), Fraction(2, 5)))
    params = cf_parameters(cf, 2)
    pm = params.prob_map()
    assert pm.get((1, 0), 0) == Fraction(3, 10)
    assert pm.get((0, 1), 0) == Fraction(3, 10)
    assert pm.get((1, 1), 0) == Fraction(3, 5)
    assert pm.get((2, 0), 0) == 0 and pm.get((0, 2), 0) == 0
    with pytest.raises(ValueError):
        cf_parameters(cf, 3)  # the dictionary pins D = r + 1


def test_cf_probability_boundary_cases():
    # survival probabilities 1 make the full r-skeleton certain
    cf = CFParams(2, 1, (Fraction(1), Fraction(1)))
    full = complex_of(2, {1, 2})
    assert cf_probability(full, cf) == 1
    # vertex death makes the empty complex certain
    cf0 = CFParams(2, 1, (Fraction(0), Fraction(1)))
    empty = SimplicialComplex(2, frozenset({frozenset()}))
    assert cf_probability(empty, cf0) == 1


def test_cf_table_two_vertex_frozen_values():
    cf = CFParams(2, 1, (Fraction(3, 10), Fraction(3, 5)))
    rows = {tuple(sorted(tuple(sorted(f)) for f in Y.faces if f)): (pm, pi)
            for Y, pm, pi in cf_distribution_table(cf)}
    expected = {
        (): (Fraction(49, 100)),
        ((1,),): Fraction(21, 100),
        ((2,),): Fraction(21, 100),
        ((1,), (2,)): Fraction(9, 250),
        ((1,), (1, 2), (2,)): Fraction(27, 500),
    }
    assert set(rows) == set(expected)
    for key, want in expected.items():
        pm, pi = rows[key]
        assert pm == pi == want
    assert sum(pm for pm, _ in rows.values()) == 1


@pytest.mark.parametrize("n,r", [(3, 2), (3, 1), (4, 1)])
def test_cf_table_both_routes_agree(n, r):
    p_tilde = tuple(Fraction(2, 3 + i) for i in range(r + 1))
    rows = cf_distribution_table(CFParams(n, r, p_tilde))
    assert sum(pm for _, pm, _ in rows) == 1
    for Y, pm, pi in rows:
        assert pm == pi, Y
