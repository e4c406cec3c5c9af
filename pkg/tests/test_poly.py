"""Sparse five-variable polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessk3.poly import (
    NVARS,
    Poly5,
    elem_sym_polys,
    halve_exponents,
    reciprocal_clear,
)

exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * NVARS)
coeffs = st.integers(min_value=-5, max_value=5).filter(bool)


def polys():
    return st.dictionaries(exponents, coeffs, max_size=4).map(Poly5)


points = st.tuples(*[st.fractions(min_value=-4, max_value=4, max_denominator=3)] * NVARS)


def test_basics():
    x0 = Poly5.var(0)
    x1 = Poly5.var(1)
    assert (x0 * x1).eval((2, 3, 1, 1, 1)) == 6
    sq = (x0 + x1) ** 2
    assert sq == x0 ** 2 + 2 * x0 * x1 + x1 ** 2
    assert sq.degree() == 2
    assert sq.homogeneous_degree() == 2
    assert (sq + Poly5.const(1)).homogeneous_degree() is None
    assert Poly5.zero().degree() == -1
    assert (x0 - x0).is_zero()
    assert Poly5.const(0).is_zero()


@given(polys(), polys(), points)
def test_eval_is_a_homomorphism(p, q, pt):
    assert (p + q).eval(pt) == p.eval(pt) + q.eval(pt)
    assert (p * q).eval(pt) == p.eval(pt) * q.eval(pt)
    assert (p - q).eval(pt) == p.eval(pt) - q.eval(pt)
    assert (3 * p).eval(pt) == 3 * p.eval(pt)


def test_eval_arity_guard():
    with pytest.raises(Exception, match="wrong arity"):
        Poly5.var(0).eval((1, 2, 3))


def test_elementary_symmetric_values():
    e = elem_sym_polys()
    pt = (1, 2, 3, 4, 5)
    assert [p.eval(pt) for p in e] == [15, 85, 225, 274, 120]
    # symmetry: any reordering of the point gives the same values
    assert [p.eval((5, 3, 1, 4, 2)) for p in e] == [15, 85, 225, 274, 120]
    # e_k is homogeneous of degree k with binomial(5, k) terms
    for k, p in enumerate(e, start=1):
        assert p.homogeneous_degree() == k
    assert [p.num_terms() for p in e] == [5, 10, 10, 5, 1]


def test_vandermonde_product():
    prod = Poly5.const(1)
    for i in range(NVARS):
        for j in range(i + 1, NVARS):
            prod = prod * (Poly5.var(j) - Poly5.var(i))
    assert prod.eval((1, 2, 3, 4, 5)) == 288
    assert prod.eval((1, 1, 3, 4, 5)) == 0
    assert prod.homogeneous_degree() == 10


def test_halve_exponents():
    p = Poly5.var(0, 2) * Poly5.var(1, 4) + Poly5.const(4)
    h = halve_exponents(p)
    assert h == Poly5.var(0) * Poly5.var(1, 2) + Poly5.const(4)
    with pytest.raises(Exception, match="odd exponent"):
        halve_exponents(Poly5.var(0))


@given(polys(), points)
def test_halve_exponents_matches_square_roots(p, pt):
    doubled = Poly5()
    doubled.terms = {tuple(2 * k for k in e): c for e, c in p.terms.items()}
    h = halve_exponents(doubled)
    sq = tuple(x * x for x in pt)
    assert h.eval(sq) == doubled.eval(pt)


def test_reciprocal_clear():
    p = Poly5.var(0) + Poly5.const(2)
    q = reciprocal_clear(p, 1)
    pt = (2, 3, 5, 7, 11)
    prod = Fraction(1)
    for x in pt:
        prod *= x
    inv = tuple(Fraction(1, x) for x in pt)
    assert q.eval(pt) == prod * p.eval(inv)
    with pytest.raises(Exception, match="above reciprocal cap"):
        reciprocal_clear(Poly5.var(0, 3), 2)


@given(polys(), points)
def test_reciprocal_clear_matches_substitution(p, pt):
    cap = max((max(e) for e in p.terms), default=0)
    q = reciprocal_clear(p, cap)
    nonzero = tuple(x if x else Fraction(1) for x in pt)
    prod = Fraction(1)
    for x in nonzero:
        prod *= x**cap
    inv = tuple(Fraction(1, x) for x in nonzero)
    assert q.eval(nonzero) == prod * p.eval(inv)
