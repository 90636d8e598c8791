"""The eta/theta subring of the cohomology of a symmetric power of a
curve: ring laws, evaluation rule, Chern/Todd classes, and the
linear-system cycle classes."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prymal.curve_tensor import integral_oracle
from prymal.sympower_ring import (
    SymClass,
    chern_total_sympower,
    eval_integral,
    linear_system_class,
    secant_classes,
    todd_inverse_of,
    todd_of,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def sym_classes(draw, g=6, d=6, max_degree=3):
    coeffs = {}
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            coeffs[(a, b)] = draw(rationals)
    return SymClass(g, d, coeffs)


# ----------------------------------------------------------------------
# construction rules

def test_vanishing_monomials_dropped():
    x = SymClass(2, 3, {(4, 0): 1, (0, 3): 1, (1, 1): 2})
    # a+b > d dropped; b > g dropped
    assert x.coefficient(4, 0) == 0
    assert x.coefficient(0, 3) == 0
    assert x.coefficient(1, 1) == 2


def test_zero_coefficients_not_stored():
    x = SymClass(2, 2, {(1, 0): 0})
    assert x.is_zero()
    assert x == SymClass.zero(2, 2)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError, match="negative exponent"):
        SymClass(2, 2, {(-1, 0): 1})


def test_incompatible_rings_rejected():
    with pytest.raises(ValueError, match="different rings"):
        SymClass.eta(2, 2) * SymClass.eta(2, 3)


def test_immutable():
    x = SymClass.eta(2, 2)
    with pytest.raises(AttributeError):
        x.genus = 3


# ----------------------------------------------------------------------
# ring laws

@settings(max_examples=30, deadline=None)
@given(sym_classes(), sym_classes())
def test_commutativity(x, y):
    assert x * y == y * x


@settings(max_examples=20, deadline=None)
@given(sym_classes(), sym_classes(), sym_classes())
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=20, deadline=None)
@given(sym_classes(), sym_classes(), sym_classes())
def test_distributivity(x, y, z):
    assert (x + y) * z == x * z + y * z


@settings(max_examples=20, deadline=None)
@given(sym_classes())
def test_unit_and_zero(x):
    g, d = x.genus, x.degree
    assert x * SymClass.one(g, d) == x
    assert x + SymClass.zero(g, d) == x
    assert x - x == SymClass.zero(g, d)


def test_scalar_multiplication():
    eta = SymClass.eta(6, 6)
    assert 3 * eta == eta * 3 == SymClass(6, 6, {(1, 0): 3})


# ----------------------------------------------------------------------
# inverse and exp

def test_inverse_of_unit():
    g, d = 6, 6
    u = SymClass.one(g, d) + SymClass.eta(g, d)
    prod = u * u.inverse()
    assert prod == SymClass.one(g, d)


def test_inverse_requires_rational_unit():
    with pytest.raises(ValueError, match="nonzero rational"):
        SymClass.eta(2, 2).inverse()


def test_exp_requires_nilpotent():
    with pytest.raises(ValueError, match="zero constant term"):
        SymClass.one(2, 2).exp()


def test_exp_adds_exponents():
    g, d = 6, 6
    a = SymClass.eta(g, d) * Fraction(1, 2)
    b = SymClass.theta(g, d)
    assert (a + b).exp() == a.exp() * b.exp()


# ----------------------------------------------------------------------
# evaluation rule

def test_eval_integral_values():
    # integral of eta^(d-b) theta^b on C^(d) is g!/(g-b)!
    assert eval_integral(6, 6, 6, 0) == 1
    assert eval_integral(6, 6, 5, 1) == 6
    assert eval_integral(6, 6, 4, 2) == 30
    assert eval_integral(6, 6, 3, 3) == 120
    assert eval_integral(6, 6, 0, 6) == 720
    assert eval_integral(2, 4, 1, 3) == 0  # b > g vanishes
    with pytest.raises(ValueError, match="top-degree"):
        eval_integral(6, 6, 1, 1)


def test_integrate_top_spot_values():
    g, d = 6, 6
    eta, theta = SymClass.eta(g, d), SymClass.theta(g, d)
    assert (eta ** 5 * theta).integrate_top() == 6
    assert (eta ** 4 * theta ** 2).integrate_top() == 30
    assert (eta ** 6).integrate_top() == 1
    mixed = eta ** 6 + 2 * eta ** 5 * theta + eta  # non-top terms ignored
    assert mixed.integrate_top() == 1 + 12


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3), st.integers(1, 4))
def test_evaluation_agrees_with_tensor_oracle(g, d):
    """The Macdonald evaluation rule matches the exterior-algebra
    fundamental-class coefficient for every top monomial."""
    for b in range(d + 1):
        a = d - b
        assert eval_integral(g, d, a, b) == integral_oracle(g, d, a, b)


# ----------------------------------------------------------------------
# Chern and Todd classes

def test_chern_total_low_terms():
    c = chern_total_sympower(6, 6)
    assert c.constant_term() == 1
    assert c.coefficient(1, 0) == 6 - 6 + 1
    assert c.coefficient(0, 1) == -1


def test_chern_genus_zero_projective_space():
    # C^(d) for g=0 is P^d with c = (1+eta)^(d+1)
    c = chern_total_sympower(0, 3)
    assert c == (SymClass.one(0, 3) + SymClass.eta(0, 3)) ** 4


def test_todd_requires_unit_constant():
    with pytest.raises(ValueError, match="constant term 1"):
        todd_of(SymClass.eta(2, 2))
    with pytest.raises(ValueError, match="constant term 1"):
        todd_inverse_of(SymClass.zero(2, 2))


def test_todd_times_inverse_is_one():
    c = chern_total_sympower(6, 6)
    assert todd_of(c) * todd_inverse_of(c) == SymClass.one(6, 6)


def test_todd_projective_line():
    # P^1: c = (1+h)^2, todd = 1 + h (h^2 = 0 on a curve)
    c = chern_total_sympower(0, 1)
    td = todd_of(c)
    assert td.coefficient(0, 0) == 1
    assert td.coefficient(1, 0) == 1


def test_todd_first_term_is_half_c1():
    c = chern_total_sympower(3, 4)
    td = todd_of(c)
    assert td.graded_part(1) == c.graded_part(1) * Fraction(1, 2)


# ----------------------------------------------------------------------
# linear-system classes

def test_linear_system_point_class():
    assert linear_system_class(6, 6, 0) == SymClass(6, 6, {(6, 0): 1})


def test_linear_system_projective_space():
    # g = 0: subspaces of |O(d)| on P^d have class eta^(d-r)
    for r in range(4):
        assert linear_system_class(0, 3, r) == SymClass(0, 3, {(3 - r, 0): 1})


def test_linear_system_exceptional_curve():
    # g=2, d=2, r=1: theta - eta, with self-intersection -1
    e = linear_system_class(2, 2, 1)
    assert e == SymClass(2, 2, {(0, 1): 1, (1, 0): -1})
    assert e.pair_with(e) == -1


def test_linear_system_errors():
    with pytest.raises(ValueError, match="nonnegative"):
        linear_system_class(2, 2, -1)
    with pytest.raises(ValueError, match="exceeds degree"):
        linear_system_class(2, 2, 3)


def test_secant_classes_structure():
    s = secant_classes(6, 6, 2)
    assert s.full.dimension == 2
    assert s.pencil.dimension == 1
    assert s.point.dimension == 0
    assert s.point.cycle == linear_system_class(6, 6, 0)
    assert s.pencil.cycle == linear_system_class(6, 6, 1)
    assert s.full.cycle == linear_system_class(6, 6, 2)
