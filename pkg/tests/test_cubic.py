"""Pentahedral invariants, the two discriminant loci, the Hessian quartic."""

from fractions import Fraction

import pytest

from hessk3 import sampling
from hessk3.cubic import (
    classical_invariants,
    classify,
    delta_km,
    delta_km_bridge_poly,
    delta_km_mu_poly,
    delta_sing,
    elem_sym_values,
    enriques_partner_check,
    hessian_equations,
    hessian_line_check,
    hessian_singular_points,
)
from hessk3.poly import elem_sym_polys

ONES = (1, 1, 1, 1, 1)
KUMMER_POINT = (1, 3, 3, -2, -2)


def test_elem_sym_values():
    assert elem_sym_values(ONES) == (5, 10, 10, 5, 1)
    assert elem_sym_values((1, 2, 3, 4, 5)) == (15, 85, 225, 274, 120)
    with pytest.raises(Exception, match="five coefficients"):
        elem_sym_values((1, 2, 3))


def test_invariants_at_ones():
    inv = classical_invariants(ONES)
    assert (inv.i8, inv.i16, inv.i24, inv.i32, inv.i40, inv.i100) == (-15, 5, 5, 10, 1, 0)


def test_invariant_weights():
    rng = sampling.make_rng(41)
    c = Fraction(3, 2)
    for _ in range(5):
        lam = sampling.sample_lambda(rng)
        scaled = classical_invariants(tuple(c * x for x in lam))
        inv = classical_invariants(lam)
        for name, w in (("i8", 8), ("i16", 16), ("i24", 24), ("i32", 32), ("i40", 40), ("i100", 100)):
            assert getattr(scaled, name) == c**w * getattr(inv, name)


def test_delta_sing_values():
    assert delta_sing(ONES) == -1215
    assert delta_sing((1, 1, 1, 1, Fraction(1, 16))) == 0
    # weight 32 under coefficient scaling
    assert delta_sing(tuple(2 * x for x in ONES)) == 2**32 * -1215


def test_delta_km_values():
    assert delta_km(ONES) == 5
    assert delta_km(KUMMER_POINT) == 0
    rng = sampling.make_rng(42)
    for _ in range(5):
        lam = sampling.sample_lambda(rng)
        assert 8 * delta_km(tuple(2 * x for x in lam)) == delta_km(lam)
    with pytest.raises(ValueError, match="Sylvester degenerate"):
        delta_km((1, 2, 3, 4, 0))


def test_delta_km_bridge_pointwise():
    rng = sampling.make_rng(43)
    bridge = delta_km_bridge_poly()
    for _ in range(8):
        lam = sampling.sample_lambda(rng)
        s5 = elem_sym_values(lam)[4]
        assert s5**3 * delta_km(lam) == bridge.eval(lam)


def test_kummer_flag_matches_bridge():
    # I8 I24 + 8 I32 = s5^4 (s4^3 - 4 s3 s4 s5 + 8 s2 s5^2) as polynomials
    _, s2, s3, s4, s5 = elem_sym_polys()
    i8 = s4 * s4 - 4 * s3 * s5
    i24 = s4 * s5**4
    i32 = s2 * s5**6
    assert i8 * i24 + 8 * i32 == s5**4 * delta_km_bridge_poly()
    # hence the flag coincides with the vanishing of delta_km off s5 = 0
    for lam in (ONES, KUMMER_POINT, (1, 2, 3, 4, 5)):
        rep = classify(lam)
        assert rep.kummer == (delta_km(lam) == 0)


def test_km_mu_poly_shape():
    p = delta_km_mu_poly()
    assert p.homogeneous_degree() == 3
    assert p.eval(ONES) == 5
    # at (1,1,1,1,0): 4 cubes - 12 mixed squares + 8 triples
    assert p.eval((1, 1, 1, 1, 0)) == 0
    # symmetric under coordinate permutation
    assert p.eval((1, 2, 3, 4, 5)) == p.eval((5, 4, 3, 2, 1))


def test_hessian_equations():
    lam = (1, 2, 3, 4, 5)
    hyper, quartic = hessian_equations(lam)
    assert hyper.eval((1, 1, 1, 1, 1)) == 5
    assert hyper.homogeneous_degree() == 1
    assert quartic.homogeneous_degree() == 4
    # sum over i of prod_{j != i} lam_j at the all-ones point is sigma4
    assert quartic.eval((1, 1, 1, 1, 1)) == 274


def test_hessian_singular_points():
    pts = hessian_singular_points()
    assert len(pts) == 10
    assert len(set(pts)) == 10
    rng = sampling.make_rng(44)
    for _ in range(4):
        lam = sampling.sample_lambda(rng)
        hyper, quartic = hessian_equations(lam)
        for pt in pts:
            assert hyper.eval(pt) == 0
            assert quartic.eval(pt) == 0


def test_hessian_lines_and_partner():
    rng = sampling.make_rng(45)
    for _ in range(3):
        lam = sampling.sample_lambda(rng)
        for i in range(5):
            for j in range(i + 1, 5):
                assert hessian_line_check(lam, (i, j))
        assert enriques_partner_check(lam)


def test_classify_reports():
    rep = classify(ONES)
    assert not rep.singular
    assert rep.eckardt
    assert not rep.kummer
    assert not rep.sylvester_degenerate
    assert rep.delta_km == 5
    assert rep.delta_sing == -1215

    rep = classify((1, 1, 1, 1, Fraction(1, 16)))
    assert rep.singular

    rep = classify((1, 2, 3, 4, 5))
    assert not rep.eckardt
    assert not rep.singular

    rep = classify((1, 2, 3, 4, 0))
    assert rep.sylvester_degenerate
    assert rep.delta_km is None

    rep = classify(KUMMER_POINT)
    assert rep.kummer and not rep.singular
