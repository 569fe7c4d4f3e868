"""Core model: validation, bundle algebra, monomial weights."""

import pytest

from equivol import (
    LinearizedBundle,
    ScenarioError,
    circle_scenario,
    scenario_from_dict,
    scenario_to_dict,
    tensor_power,
    tensor_product,
    validate_scenario,
    weight_of_monomial,
)


def test_valid_p1(p1_hyperplane):
    s = p1_hyperplane
    assert s.dim == 1
    assert s.group.dim == 1
    assert s.quotient_degree == 0


def test_su2_factor_accounting(su2_p3):
    assert su2_p3.dim == 3
    assert su2_p3.group.dim == 3
    assert su2_p3.quotient_degree == 0


def test_dimension_mismatch_rejected():
    from equivol import GroupSpec, ProjectiveFactor, Scenario

    bad = Scenario(
        GroupSpec.circles(1),
        (ProjectiveFactor(dim=1, weights=((1,), (-1,), (0,))),),  # 3 weights on P^1
        LinearizedBundle((1,), (0,)),
    )
    with pytest.raises(ScenarioError):
        validate_scenario(bad)


def test_su2_with_circle_weights_rejected():
    from equivol import GroupSpec, ProjectiveFactor, Scenario

    bad = Scenario(
        GroupSpec.su2(),
        (ProjectiveFactor(dim=1, weights=((1,), (-1,))),),
        LinearizedBundle((1,), ()),
    )
    with pytest.raises(ScenarioError):
        validate_scenario(bad)


def test_nonpositive_degree_rejected():
    with pytest.raises(ScenarioError):
        circle_scenario([[1, -1]], [0])


def test_su2_block_count_mismatch_explicit():
    from equivol import GroupSpec, ProjectiveFactor, Scenario

    bad = Scenario(
        GroupSpec.su2(),
        (ProjectiveFactor(dim=3, sym_powers=(1,)),),
        LinearizedBundle((1,), ()),
    )
    with pytest.raises(ScenarioError):
        validate_scenario(bad)


def test_tensor_power_componentwise():
    b = LinearizedBundle((1, 2), (3,))
    assert tensor_power(b, 3) == LinearizedBundle((3, 6), (9,))
    assert tensor_power(LinearizedBundle((1,), (0,)), 2) == LinearizedBundle((2,), (0,))
    assert tensor_power(LinearizedBundle((2,), (-1,)), 1) == LinearizedBundle((2,), (-1,))


def test_tensor_power_composes():
    b = LinearizedBundle((1, 2), (-1,))
    assert tensor_power(tensor_power(b, 2), 3) == tensor_power(b, 6)


def test_tensor_product_adds():
    a = LinearizedBundle((1,), (2,))
    b = LinearizedBundle((3,), (-1,))
    assert tensor_product(a, b) == LinearizedBundle((4,), (1,))


def test_validation_idempotent(p2_circle):
    assert validate_scenario(p2_circle) == p2_circle


def test_rational_arithmetic_roundtrip():
    from fractions import Fraction

    for num, den in ((1, 2), (-7, 3), (22, 4), (5, 1)):
        x = Fraction(num, den)
        assert x * (1 / x) == 1
        assert x.denominator > 0  # stored in lowest terms, positive denominator
        from math import gcd

        assert gcd(x.numerator, x.denominator) == 1


def test_monomial_weight_reproduces_p2_basis(p2_circle):
    # z0^(k-a-b) z1^a z2^b has weight 2(a+b) - k; a+b = (k+mu)/2 gives mu
    k = 4
    for a in range(0, k + 1):
        for b in range(0, k + 1 - a):
            mu = weight_of_monomial(p2_circle, (k - a - b, a, b))
            assert mu == 2 * (a + b) - k
    assert weight_of_monomial(p2_circle, (2, 1, 1)) == 0


def test_monomial_weight_single_coordinate(p1_hyperplane):
    for k in (1, 3, 7):
        alpha = (k, 0)
        assert weight_of_monomial(p1_hyperplane, alpha) == k


def test_monomial_weight_twist_shift():
    s = circle_scenario([[1, -1]], [1], twist=1)
    # z0 z1 at k = 2: weight 0 + 2*1
    assert weight_of_monomial(s, (1, 1)) == 2


def test_monomial_weight_additive(p2_circle):
    # weight of a product across tensor powers is the sum of weights
    w1 = weight_of_monomial(p2_circle, (1, 1, 0))  # k = 2
    w2 = weight_of_monomial(p2_circle, (0, 1, 2))  # k = 3
    w12 = weight_of_monomial(p2_circle, (1, 2, 2))  # k = 5
    assert w12 == w1 + w2


def test_monomial_degree_mismatch(p2_circle):
    with pytest.raises(ScenarioError):
        weight_of_monomial(p2_circle, (1, 1, 0), k=3)


def test_document_roundtrip(corpus):
    for name, s in corpus:
        assert scenario_from_dict(scenario_to_dict(s)) == s, name


def test_document_missing_field_named():
    with pytest.raises(ScenarioError, match="degrees"):
        scenario_from_dict(
            {"group": "circle_power", "g": 1,
             "factors": [{"dim": 1, "weights": [1, -1]}], "bundle": {}}
        )
    with pytest.raises(ScenarioError, match="factors"):
        scenario_from_dict({"group": "circle_power", "g": 1, "bundle": {"degrees": [1]}})
