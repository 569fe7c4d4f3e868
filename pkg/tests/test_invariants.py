"""Cross-module structural invariants."""

from fractions import Fraction

import pytest

from equivol import (
    EngineLimit,
    UnsupportedScenario,
    circle_scenario,
    classify_stability,
    dh_slice_volume,
    equivariant_volume,
    full_weight_distribution,
    g_exponent,
    g_semigroup,
    moment_image,
    mu_semigroup,
    residue_volume,
    section_dimension,
    su2_scenario,
)


def test_support_exactly_fills_image_away_from_vertices():
    # inside the dilated image and away from the vertices by a
    # coin-problem margin, every lattice point in the right residue class
    # is attained; near a vertex gaps can persist at every k (weights
    # (-1,1,2): mu = -k+1 is never attained)
    s = circle_scenario([[-1, 1, 2]], [1])
    assert section_dimension(s, 20, -19) == 0  # the persistent gap
    k = 20
    lo, hi = moment_image(s).interval
    margin = 9  # > Frobenius bound for the difference steps {1,2,3}
    supp = set(full_weight_distribution(s, k))
    for mu in range(int(lo * k) + margin, int(hi * k) - margin + 1):
        assert mu in supp, mu


def test_support_containment_all_k(corpus):
    for name, s in corpus:
        if s.group.is_su2 and len(s.factors) > 1:
            continue
        img = moment_image(s)
        for k in (1, 4, 9):
            for mu in full_weight_distribution(s, k):
                assert img.scaled_contains(s.weight_vec(mu), k), (name, k, mu)


def test_invariant_count_degree_bounded_on_regular(corpus):
    # dim H^0(L^(el))^G grows at most like l^(n-g): the exact fit on a
    # regular scenario reaches a polynomial of degree <= n-g
    for name, s in corpus:
        if s.group.is_su2 and len(s.factors) > 1:
            continue
        if not s.group.is_su2 and s.group.dim > 2:
            continue
        if classify_stability(s).stability != "regular":
            continue
        zero = 0 if s.group.torus_rank == 1 else (0,) * s.group.dim
        est = equivariant_volume(s, zero)
        assert est.status == "exact", name
        assert est.fit.degree <= max(s.quotient_degree, 0), name


def test_residue_bounded_by_volume(p2_circle):
    e = g_exponent(p2_circle, 20).exponent
    vol = equivariant_volume(p2_circle, 1).value
    for f in range(e):
        rv = residue_volume(p2_circle, 1, f).estimate
        assert rv.value <= vol


def test_mu_semigroup_translation_structure(su2_p3):
    from equivol import numerically_compatible

    gs = g_semigroup(su2_p3, 30)
    for mu in (1, 2, 3):
        r = numerically_compatible(su2_p3, mu).witness
        expect = ({r} | {r + m for m in gs}) & set(range(mu, 31))
        assert mu_semigroup(su2_p3, mu, 30) == expect


def test_cell_budget_guard():
    s = circle_scenario([[10**3, -(10**3)]], [1])
    with pytest.raises(EngineLimit):
        section_dimension(s, 10**4, 0, cell_budget=1000)


def test_dh_slice_preconditions():
    with pytest.raises(UnsupportedScenario):
        dh_slice_volume(circle_scenario([[1, 2]], [1]))  # not regular
    with pytest.raises(UnsupportedScenario):
        dh_slice_volume(circle_scenario([[-1, 1, 1], [1, -1]], [1, 1]))  # product
    with pytest.raises(UnsupportedScenario):
        dh_slice_volume(su2_scenario([[1, 1]], [1]))  # wrong group


def test_dh_slice_equals_counted_volume_on_supported(corpus):
    for name, s in corpus:
        if s.group.is_su2 or s.group.dim != 1 or len(s.factors) != 1:
            continue
        if s.factors[0].dim > 3:
            continue
        if classify_stability(s).stability != "regular":
            continue
        assert dh_slice_volume(s) == equivariant_volume(s, 0).value, name


def test_dh_slice_twisted_p2():
    # regular twisted classes on P^2: vol_0 = (d - c)/2
    for d, c in ((2, 1), (3, -1), (4, 3)):
        s = circle_scenario([[-1, 1, 1]], [d], twist=c)
        assert classify_stability(s).stability == "regular"
        assert dh_slice_volume(s) == Fraction(d - c, 2)
        assert equivariant_volume(s, 0).value == Fraction(d - c, 2)


def test_asymmetric_product_degrees():
    # P^2 x P^1 with multidegree (1,3): the P^2 weight range dominates, so
    # h^0_0(k) = (k+1)(k+2)/2 and vol_mu = 1 on even weights, 0 on odd
    s = circle_scenario([[-1, 1, 1], [1, -1]], [1, 3])
    assert section_dimension(s, 4, 0) == 15
    for mu in (-2, 0, 2):
        assert equivariant_volume(s, mu).value == 1, mu
    for mu in (-1, 1):
        assert equivariant_volume(s, mu).value == 0, mu


def test_asymmetric_product_with_twist():
    # adding twist 1 shifts the support parity with the level, making
    # every weight compatible: vol_mu = 1 for all mu
    s = circle_scenario([[-1, 1, 1], [1, -1]], [1, 3], twist=1)
    for mu in range(-2, 3):
        assert equivariant_volume(s, mu).value == 1, mu


def test_degenerate_segment_image():
    # collinear rank-2 weights: the image is a segment off the origin
    from equivol import vanishing_certificate

    s = circle_scenario([[(1, 1), (2, 2)]], [1], g=2)
    img = moment_image(s)
    assert len(img.vertices) == 2
    assert not img.contains_zero()
    assert classify_stability(s).stability == "unstable_everywhere"
    # (3,3) is attainable exactly for k in {2, 3}
    assert img.scale_range((3, 3)) == (2, 3)
    assert vanishing_certificate(s, (3, 3)) == 4
    for k in (1, 2, 3, 4, 5):
        expect = 1 if k in (2, 3) else 0
        assert section_dimension(s, k, (3, 3)) == expect, k


def test_point_image_rank2():
    from equivol import vanishing_certificate

    s = circle_scenario([[(2, 3), (2, 3)]], [1], g=2)
    img = moment_image(s)
    assert len(img.vertices) == 1
    assert img.scale_range((4, 6)) == (2, 2)
    assert img.scale_range((3, 6)) == (None, None)
    assert vanishing_certificate(s, (4, 6)) == 3
    assert vanishing_certificate(s, (3, 6)) == 1


def test_volume_estimate_immutable(p2_circle):
    est = equivariant_volume(p2_circle, 0)
    with pytest.raises(Exception):
        est.value = Fraction(1)


def test_g3_pointwise_counting_supported():
    # higher circle rank: pointwise queries work, dense geometry does not
    s = circle_scenario(
        [[(1, 0, 0), (0, 1, 0), (0, 0, 1)]],
        [1],
        g=3,
    )
    assert section_dimension(s, 2, (1, 1, 0)) == 1
    assert section_dimension(s, 2, (2, 0, 0)) == 1
    assert section_dimension(s, 2, (1, 0, 0)) == 0
    with pytest.raises(UnsupportedScenario):
        moment_image(s)
    with pytest.raises(UnsupportedScenario):
        equivariant_volume(s, (0, 0, 0))
