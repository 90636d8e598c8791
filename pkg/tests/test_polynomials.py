"""Dense univariate polynomials over exact rationals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prymal.polynomials import Poly, format_poly, format_rational

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
polys = st.lists(rationals, min_size=0, max_size=5).map(Poly)


def test_basic_construction():
    p = Poly([44, -160, 160])
    assert p.degree() == 2
    assert p.coefficient(2) == 160
    assert p.coefficient(7) == 0
    assert p(0) == 44
    assert p(1) == 44 - 160 + 160
    assert Poly.zero().degree() == -1
    assert Poly.variable()(5) == 5


def test_trailing_zeros_normalized():
    assert Poly([1, 2, 0, 0]).degree() == 1
    assert Poly([0]).is_zero()


@settings(max_examples=60, deadline=None)
@given(polys, polys, rationals)
def test_evaluation_is_ring_morphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@settings(max_examples=60, deadline=None)
@given(polys, rationals, rationals)
def test_compose_scale(p, factor, x):
    assert p.compose_scale(factor)(x) == p(factor * x)


def test_compose_scale_halving():
    p = Poly([44, -160, 160])
    half = p.compose_scale(Fraction(1, 2))
    assert half == Poly([44, -80, 40])


def test_is_integral():
    assert Poly([1, -3, 2]).is_integral()
    assert not Poly([Fraction(1, 2)]).is_integral()


def test_constant_value():
    assert Poly([7]).constant_value() == 7
    with pytest.raises(ValueError, match="not constant"):
        Poly([1, 1]).constant_value()


def test_format_rational():
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(3, -4)) == "-3/4"  # denominator kept > 0
    assert format_rational(0) == "0"


def test_format_poly():
    assert format_poly(Poly([44, -160, 160])) == "160n^2 - 160n + 44"
    assert format_poly(Poly([22, -40, 20])) == "20n^2 - 40n + 22"
    assert format_poly(Poly.zero()) == "0"
    assert format_poly(Poly([0, 1])) == "n"
    assert format_poly(Poly([0, -1])) == "-n"
    assert format_poly(Poly([Fraction(1, 2), 1])) == "n + 1/2"
    assert format_poly(Poly([2]), variable="x") == "2"
    assert format_poly(Poly([0, 0, Fraction(-3, 2)]), variable="x") \
        == "-3/2x^2"
