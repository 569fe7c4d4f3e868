"""Multiplicity engine against the brute-force oracle and pinned values.

The oracle (explicit monomial enumeration; raising-operator kernel ranks
for SU(2)) is the independent route: everything the convolution engine
produces is checked against it on small levels before any asymptotics are
trusted.
"""

import pytest

from equivol import (
    EngineLimit,
    brute_force_oracle,
    circle_scenario,
    full_weight_distribution,
    isotypic_multiplicity,
    isotypic_table,
    section_dimension,
    su2_scenario,
    total_dimension,
)
from equivol.counting import check_conservation


def assert_oracle_agrees(s, k_range):
    for k in k_range:
        assert full_weight_distribution(s, k) == brute_force_oracle(s, k), f"k={k}"
        check_conservation(s, k)


def test_p1_distribution_small(p1_hyperplane):
    assert full_weight_distribution(p1_hyperplane, 2) == {-2: 1, 0: 1, 2: 1}
    assert full_weight_distribution(p1_hyperplane, 0) == {0: 1}


def test_p1_section_dimension(p1_hyperplane):
    # the five monomials of O(4) have weights 4, 2, 0, -2, -4
    assert section_dimension(p1_hyperplane, 4, 2) == 1
    assert section_dimension(p1_hyperplane, 4, 3) == 0
    assert section_dimension(p1_hyperplane, 4, 6) == 0


def test_p2_invariants_match_reduced_space(p2_circle):
    # dim H^0(P^2, O(2r))_0 = 1 + r
    for r in (1, 2, 5, 9):
        assert section_dimension(p2_circle, 2 * r, 0) == 1 + r
    assert section_dimension(p2_circle, 3, 0) == 0


def test_su2_p3_pattern(su2_p3):
    # isotypic dimension (mu+1)^2 exactly when mu <= k and k = mu mod 2
    for k in range(0, 9):
        for mu in range(0, k + 3):
            expect = (mu + 1) ** 2 if (mu <= k and (k - mu) % 2 == 0) else 0
            assert section_dimension(su2_p3, k, mu) == expect, (k, mu)
    assert section_dimension(su2_p3, 5, 3) == 16


def test_su2_p3_distribution_small(su2_p3):
    # Sym^2(V + V) = Sym^2(V)^3 + trivial
    assert full_weight_distribution(su2_p3, 2) == {0: 1, 2: 3}
    assert full_weight_distribution(su2_p3, 0) == {0: 1}


def test_su2_multiplicity_vs_dimension(su2_p3):
    assert isotypic_multiplicity(su2_p3, 5, 3) == 4
    assert section_dimension(su2_p3, 5, 3) == 16


def test_total_dimension_binomials(p2_circle, su2_p3):
    assert total_dimension(p2_circle, 3) == 10
    assert total_dimension(su2_p3, 2) == 10
    prod = circle_scenario([[-1, 1, 1], [1, -1]], [1, 1])
    assert total_dimension(prod, 2) == 6 * 3


def test_oracle_p1(p1_hyperplane):
    assert_oracle_agrees(p1_hyperplane, range(0, 9))


def test_oracle_p1_twisted():
    s = circle_scenario([[1, -1]], [1], twist=1)
    assert_oracle_agrees(s, range(0, 7))
    assert full_weight_distribution(s, 2) == {0: 1, 2: 1, 4: 1}


def test_oracle_p2(p2_circle):
    assert_oracle_agrees(p2_circle, range(0, 7))


def test_oracle_p2_skew():
    assert_oracle_agrees(circle_scenario([[-1, 1, 2]], [1]), range(0, 7))


def test_oracle_product():
    prod = circle_scenario([[-1, 1, 1], [1, -1]], [1, 1])
    assert_oracle_agrees(prod, range(0, 6))


def test_oracle_rank2(p1p1_diag):
    assert_oracle_agrees(p1p1_diag, range(0, 7))
    assert full_weight_distribution(p1p1_diag, 1) == {
        (1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1
    }


def test_oracle_su2_p3(su2_p3):
    assert_oracle_agrees(su2_p3, range(0, 9))


def test_oracle_su2_p1():
    s = su2_scenario([[1]], [1])
    assert_oracle_agrees(s, range(0, 9))
    # Sym^k(V) is irreducible: support is exactly {k}
    assert full_weight_distribution(s, 5) == {5: 1}


def test_oracle_su2_p5(su2_p5):
    assert_oracle_agrees(su2_p5, range(0, 6))


def test_oracle_su2_mixed_blocks():
    s = su2_scenario([[2, 0]], [1])
    assert_oracle_agrees(s, range(0, 7))


def test_weight_negation_symmetry(p2_circle):
    # negating all weights and the twist reflects the distribution
    neg = circle_scenario([[1, -1, -1]], [1])
    for k in range(0, 7):
        dist = full_weight_distribution(p2_circle, k)
        assert full_weight_distribution(neg, k) == {-m: c for m, c in dist.items()}


def test_twist_shifts_distribution():
    base = circle_scenario([[-1, 1, 1]], [1])
    tw = circle_scenario([[-1, 1, 1]], [1], twist=2)
    for k in range(0, 6):
        dist = full_weight_distribution(base, k)
        assert full_weight_distribution(tw, k) == {m + 2 * k: c for m, c in dist.items()}


def test_isotypic_table_support(p1_hyperplane):
    table = isotypic_table(p1_hyperplane, 4)
    assert table.entries[(2, 0)] == 1
    assert (3, 0) not in table.entries
    assert table.entries[(0, 0)] == 1


def test_oracle_budget_guard(p2_circle):
    with pytest.raises(EngineLimit):
        brute_force_oracle(p2_circle, 10_000)
