"""Tests for the tensor-coordinate model of curve-product cohomology.

The independent anchors here are classical facts about a genus-g curve
C and its symmetric powers, derived by hand before the assertions were
written: the product table of H*(C) (a_i b_i = w, b_i a_i = -w, all
other positive-degree products zero), graded commutativity with the
Koszul sign, and the top integrals over the d-th symmetric power
  integral of eta^(d-b) theta^b = g (g-1) ... (g-b+1)
(a falling factorial, zero as soon as b exceeds g).
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from prymal.curve_tensor import (
    CurveModel,
    DoubleCoverModel,
    add,
    eta_class,
    express_in_eta_theta,
    fundamental_coefficient,
    integral_oracle,
    mul,
    power,
    scale,
    sym_monomial,
    theta_class,
    unit_element,
)
from prymal.exactlinalg import LinearSystemError

ONE = Fraction(1)


def singleton(codes):
    return {tuple(codes): ONE}


def falling_factorial(g, b):
    out = Fraction(1)
    for j in range(b):
        out *= g - j
    return out


class TestModelStructure:
    def test_codes_are_unit_alphas_betas_point(self):
        m = CurveModel(2)
        assert [m.alpha(i) for i in (1, 2)] == [1, 2]
        assert [m.beta(i) for i in (1, 2)] == [3, 4]
        assert m.point == 5
        assert m.genus == 2

    def test_degrees(self):
        m = CurveModel(2)
        assert m.degree[0] == 0
        assert all(m.degree[c] == 1 for c in (1, 2, 3, 4))
        assert m.degree[m.point] == 2

    def test_negative_genus_rejected(self):
        with pytest.raises(ValueError, match="genus must be nonnegative"):
            CurveModel(-1)

    def test_genus_zero_has_only_unit_and_point(self):
        m = CurveModel(0)
        assert m.point == 1
        assert m.degree == [0, 2]


class TestElementAlgebra:
    def test_unit_element(self):
        assert unit_element(3) == {(0, 0, 0): ONE}

    def test_scale_by_zero_gives_empty_dict(self):
        assert scale({(1,): ONE}, 0) == {}

    def test_scale(self):
        assert scale({(1,): Fraction(3)}, Fraction(1, 2)) == {(1,): Fraction(3, 2)}

    def test_add_cancels_to_empty(self):
        u = {(1,): ONE, (2,): Fraction(2)}
        v = {(1,): -ONE}
        assert add(u, v) == {(2,): Fraction(2)}
        assert add(u, scale(u, -1)) == {}

    def test_unit_is_identity(self):
        m = CurveModel(2)
        u = {(1, 5): Fraction(3), (0, 2): Fraction(-1)}
        assert mul(m, unit_element(2), u) == u
        assert mul(m, u, unit_element(2)) == u

    def test_single_slot_product_table(self):
        m = CurveModel(2)
        a1, a2, b1, b2, w = (1,), (2,), (3,), (4,), (5,)
        assert mul(m, singleton(a1), singleton(b1)) == {w: ONE}
        assert mul(m, singleton(b1), singleton(a1)) == {w: -ONE}
        assert mul(m, singleton(a2), singleton(b2)) == {w: ONE}
        # mismatched indices, squares, and anything against the point vanish
        for x, y in [(a1, b2), (a2, b1), (a1, a1), (a1, a2), (b1, b2),
                     (w, a1), (b2, w), (w, w)]:
            assert mul(m, singleton(x), singleton(y)) == {}

    def test_odd_classes_in_different_slots_anticommute(self):
        m = CurveModel(1)
        u = singleton((1, 0))
        v = singleton((0, 1))
        assert mul(m, u, v) == {(1, 1): ONE}
        assert mul(m, v, u) == {(1, 1): -ONE}

    def test_supercommutativity_exhaustive(self):
        # u v = (-1)^{|u||v|} v u for every pair of basis tensors,
        # genus 1 with two slots.
        m = CurveModel(1)
        keys = list(product(range(4), repeat=2))
        for xs in keys:
            for ys in keys:
                sign = (-1) ** (sum(m.degree[c] for c in xs)
                                * sum(m.degree[c] for c in ys))
                lhs = mul(m, singleton(xs), singleton(ys))
                rhs = scale(mul(m, singleton(ys), singleton(xs)), sign)
                assert lhs == rhs, (xs, ys)

    def test_associativity_sampled(self):
        m = CurveModel(1)
        keys = list(product(range(4), repeat=2))
        rng = random.Random(7)
        for _ in range(200):
            u = singleton(rng.choice(keys))
            v = singleton(rng.choice(keys))
            w = singleton(rng.choice(keys))
            assert mul(m, mul(m, u, v), w) == mul(m, u, mul(m, v, w))

    def test_distributivity(self):
        m = CurveModel(2)
        u = {(1, 0): ONE, (0, 5): Fraction(2)}
        v = {(3, 0): Fraction(3)}
        w = {(0, 4): Fraction(-1), (3, 0): Fraction(1, 2)}
        assert mul(m, u, add(v, w)) == add(mul(m, u, v), mul(m, u, w))

    def test_power(self):
        m = CurveModel(2)
        eta = eta_class(m, 2)
        assert power(m, eta, 0, 2) == unit_element(2)
        assert power(m, eta, 1, 2) == eta
        assert power(m, eta, 2, 2) == mul(m, eta, eta)

    def test_negative_power_rejected(self):
        m = CurveModel(1)
        with pytest.raises(ValueError, match="negative power"):
            power(m, eta_class(m, 1), -1, 1)


class TestEtaTheta:
    def test_eta_puts_the_point_class_in_each_slot(self):
        m = CurveModel(2)
        assert eta_class(m, 2) == {(5, 0): ONE, (0, 5): ONE}

    def test_theta_two_slots_genus_one(self):
        # theta = (a in slot 1 + a in slot 2)(b in slot 1 + b in slot 2):
        # the same-slot products contribute the point class, the cross
        # terms keep their Koszul sign.
        m = CurveModel(1)
        assert theta_class(m, 2) == {
            (3, 0): ONE,
            (0, 3): ONE,
            (1, 2): ONE,
            (2, 1): -ONE,
        }

    @pytest.mark.parametrize("g", range(0, 5))
    def test_theta_on_one_slot_is_genus_times_eta(self, g):
        m = CurveModel(g)
        assert theta_class(m, 1) == scale(eta_class(m, 1), g)

    def test_sym_monomial_matches_explicit_powers(self):
        m = CurveModel(2)
        eta = eta_class(m, 3)
        theta = theta_class(m, 3)
        assert sym_monomial(2, 3, 0, 0) == unit_element(3)
        assert sym_monomial(2, 3, 1, 0) == eta
        assert sym_monomial(2, 3, 0, 1) == theta
        assert sym_monomial(2, 3, 2, 1) == mul(m, mul(m, eta, eta), theta)

    def test_sym_monomial_is_cached(self):
        assert sym_monomial(2, 2, 1, 1) is sym_monomial(2, 2, 1, 1)


class TestIntegrals:
    def test_fundamental_coefficient_reads_the_all_point_key(self):
        m = CurveModel(2)
        u = {(5, 5): Fraction(7), (1, 3): Fraction(9)}
        assert fundamental_coefficient(m, 2, u) == 7
        assert fundamental_coefficient(m, 2, {(1, 3): ONE}) == 0

    def test_top_integrals_are_falling_factorials(self):
        for g in range(0, 4):
            for d in range(1, 5):
                for b in range(0, d + 1):
                    assert integral_oracle(g, d, d - b, b) == \
                        falling_factorial(g, b), (g, d, b)

    def test_spot_values(self):
        assert integral_oracle(1, 1, 0, 1) == 1
        assert integral_oracle(2, 2, 0, 2) == 2
        assert integral_oracle(3, 3, 0, 3) == 6
        assert integral_oracle(3, 3, 1, 2) == 6
        assert integral_oracle(2, 3, 3, 0) == 1

    def test_theta_power_beyond_genus_integrates_to_zero(self):
        assert integral_oracle(2, 3, 0, 3) == 0
        assert integral_oracle(1, 2, 0, 2) == 0

    def test_non_top_monomial_rejected(self):
        with pytest.raises(ValueError, match="not a top-degree monomial"):
            integral_oracle(2, 2, 1, 2)


class TestExpressInEtaTheta:
    def test_degree_one_roundtrip(self):
        u = add(scale(sym_monomial(2, 3, 1, 0), 3),
                scale(sym_monomial(2, 3, 0, 1), -5))
        assert express_in_eta_theta(2, 3, u, 1) == {
            (1, 0): Fraction(3),
            (0, 1): Fraction(-5),
        }

    def test_theta_square_relation_three_slots_genus_two(self):
        # On the 3-fold product with g = 2 the three degree-2 monomials
        # satisfy theta^2 = -2 eta^2 + 2 eta theta; both pairings
        # against eta and against theta confirm the coefficients.
        lhs = sym_monomial(2, 3, 0, 2)
        rhs = add(scale(sym_monomial(2, 3, 2, 0), -2),
                  scale(sym_monomial(2, 3, 1, 1), 2))
        assert lhs == rhs

    def test_theta_square_relation_three_slots_genus_three(self):
        lhs = sym_monomial(3, 3, 0, 2)
        rhs = add(scale(sym_monomial(3, 3, 2, 0), -6),
                  scale(sym_monomial(3, 3, 1, 1), 4))
        assert lhs == rhs

    def test_canonical_reduction_drops_dependent_monomials(self):
        # The answer is supported on the maximal independent prefix in
        # increasing theta degree, so theta^2 contributions fold into
        # eta^2 and eta theta.
        u = add(add(scale(sym_monomial(2, 3, 2, 0), 2),
                    scale(sym_monomial(2, 3, 1, 1), 5)),
                scale(sym_monomial(2, 3, 0, 2), -7))
        assert express_in_eta_theta(2, 3, u, 2) == {
            (2, 0): Fraction(16),
            (1, 1): Fraction(-9),
        }

    def test_top_degree_reduction_equals_the_integral(self):
        # In the top degree every monomial is a multiple of eta^d, and
        # since eta^d integrates to 1 the multiple is the integral.
        assert express_in_eta_theta(2, 2, sym_monomial(2, 2, 0, 2), 2) == {
            (2, 0): Fraction(2),
        }
        assert express_in_eta_theta(3, 3, sym_monomial(3, 3, 0, 3), 3) == {
            (3, 0): Fraction(6),
        }

    def test_one_slot_genus_one_merges_eta_and_theta(self):
        # With one slot theta equals g eta, so a combination collapses
        # onto eta alone.
        u = add(scale(sym_monomial(1, 1, 1, 0), 3),
                scale(sym_monomial(1, 1, 0, 1), -5))
        assert express_in_eta_theta(1, 1, u, 1) == {(1, 0): Fraction(-2)}

    def test_empty_input_gives_empty_answer(self):
        assert express_in_eta_theta(1, 1, {}, 2) == {}

    def test_class_with_no_surviving_monomials_raises(self):
        # At degree 2 on a single slot both candidate monomials vanish
        # identically, so any nonzero class is out of reach.
        with pytest.raises(LinearSystemError,
                           match="class outside the eta theta span"):
            express_in_eta_theta(1, 1, {(0,): ONE}, 2)

    def test_class_outside_the_span_raises(self):
        # An odd class is never a combination of eta and theta.
        with pytest.raises(LinearSystemError):
            express_in_eta_theta(1, 1, {(1,): ONE}, 1)


class TestDoubleCoverModel:
    def test_base_genus_must_be_positive(self):
        with pytest.raises(ValueError, match="base genus must be at least 1"):
            DoubleCoverModel(0)

    def test_cover_genus(self):
        dcm = DoubleCoverModel(2)
        assert dcm.base.genus == 2
        assert dcm.cover.genus == 3

    def test_pushforward_on_basis_codes(self):
        # Base genus 2: cover codes are unit, a~1..a~3, b~1..b~3, point.
        # The invariant pair transfers as a~1 -> 2 a_1, b~1 -> b_1; the
        # two swapped pairs both land on the second base pair; the unit
        # picks up the covering degree.
        dcm = DoubleCoverModel(2)
        images = {c: dcm.pushforward_element({(c,): ONE}) for c in range(8)}
        assert images[0] == {(0,): Fraction(2)}
        assert images[1] == {(1,): Fraction(2)}
        assert images[2] == {(2,): ONE}
        assert images[3] == {(2,): ONE}
        assert images[4] == {(3,): ONE}
        assert images[5] == {(4,): ONE}
        assert images[6] == {(4,): ONE}
        assert images[7] == {(5,): ONE}

    def test_pullback_on_basis_codes(self):
        dcm = DoubleCoverModel(2)
        images = {c: dcm.pullback_element({(c,): ONE}) for c in range(6)}
        assert images[0] == {(0,): ONE}
        assert images[1] == {(1,): ONE}
        assert images[2] == {(2,): ONE, (3,): ONE}
        assert images[3] == {(4,): Fraction(2)}
        assert images[4] == {(5,): ONE, (6,): ONE}
        assert images[5] == {(7,): Fraction(2)}

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_pushforward_of_pullback_doubles(self, g):
        dcm = DoubleCoverModel(g)
        for code in range(2 * g + 2):
            u = {(code,): ONE}
            assert dcm.pushforward_element(dcm.pullback_element(u)) == \
                scale(u, 2), code

    def test_projection_formula_exhaustive_one_slot(self):
        # push(pull(x) * y) == x * push(y) for every pair of basis
        # classes on a single slot.
        dcm = DoubleCoverModel(2)
        for xc in range(6):
            for yc in range(8):
                x = {(xc,): ONE}
                y = {(yc,): ONE}
                lhs = dcm.pushforward_element(
                    mul(dcm.cover, dcm.pullback_element(x), y))
                rhs = mul(dcm.base, x, dcm.pushforward_element(y))
                assert lhs == rhs, (xc, yc)

    def test_pushforward_is_slotwise_on_longer_keys(self):
        dcm = DoubleCoverModel(2)
        assert dcm.pushforward_element({(1, 7): Fraction(3)}) == {
            (1, 5): Fraction(6),
        }

    def test_pullback_doubles_each_point_slot(self):
        dcm = DoubleCoverModel(2)
        assert dcm.pullback_element({(5, 5): ONE}) == {(7, 7): Fraction(4)}

    def test_pullback_expands_products_of_sums(self):
        dcm = DoubleCoverModel(2)
        assert dcm.pullback_element({(2, 4): ONE}) == {
            (2, 5): ONE,
            (2, 6): ONE,
            (3, 5): ONE,
            (3, 6): ONE,
        }
