"""Tests for the Hodge-theoretic counting module.

Independent anchors derived before asserting: eulerian rows sum to g!
and are symmetric; the primal rank g! + C(2g, g+1) - C(2g, g) at small
g gives 0, 1, 10, 78; chi(O of the divisor) = (-1)^(g+1) from the
structure sequence; the alternating sum of sheaf Euler
characteristics telescopes to the topological Euler characteristic
(-1)^(g-1) g!; and the closed residue values 1/16 (first kernel, g=5,
p=2) and -5/2 (second kernel, g=5, p=1) were computed by hand from the
partial-fraction expansions.
"""

from fractions import Fraction
from math import comb, factorial

import pytest

from prymal.hodge_primal import (
    HodgeVector,
    RankPair,
    boundary_delta,
    catalan_rank_identity,
    chi2_closed,
    chi2_residue,
    chi2_residue_z,
    chi4_closed,
    chi4_residue,
    chi_omega_p,
    chi_quotient_identity,
    chi_theta,
    chi_theta_quotient,
    eulerian,
    eulerian_by_recurrence,
    hodge_K,
    hodge_Kminus,
    hodge_Kplus,
    rank_K,
    rank_Kpm,
    two_torsion_on_theta,
)


class TestEulerian:
    def test_spot_values(self):
        assert eulerian(5, 2) == 66
        assert eulerian(4, 1) == 11
        assert eulerian(1, 0) == 1

    def test_rows_sum_to_factorials(self):
        for g in range(1, 9):
            assert sum(eulerian(g, p) for p in range(g)) == factorial(g)

    def test_rows_are_symmetric(self):
        for g in range(1, 9):
            for p in range(g):
                assert eulerian(g, p) == eulerian(g, g - 1 - p)

    def test_alternating_sum_equals_recurrence(self):
        for g in range(1, 11):
            for p in range(g):
                assert eulerian(g, p) == eulerian_by_recurrence(g, p), (g, p)

    def test_out_of_range_rejected(self):
        for bad in (lambda: eulerian(5, 5), lambda: eulerian(5, -1),
                    lambda: eulerian_by_recurrence(5, 5)):
            with pytest.raises(ValueError, match="descent count p out of range"):
                bad()


class TestHodgeVector:
    def test_validation_errors(self):
        with pytest.raises(ValueError, match="need g >= 2"):
            HodgeVector(1, (1,))
        with pytest.raises(ValueError, match="expected 3 entries"):
            HodgeVector(3, (1, 1))
        with pytest.raises(ValueError, match="non-integer entry"):
            HodgeVector(3, (1, Fraction(1, 2), 1))
        with pytest.raises(ValueError, match="negative entry"):
            HodgeVector(3, (-1, 2, -1))
        with pytest.raises(ValueError, match="not symmetric"):
            HodgeVector(3, (1, 2, 3))

    def test_total_and_level(self):
        v = HodgeVector(5, (0, 16, 46, 16, 0))
        assert v.total() == 78
        assert v.level() == 2
        assert HodgeVector(5, (0, 0, 6, 0, 0)).level() == 0
        assert HodgeVector(3, (0, 0, 0)).level() is None

    def test_fraction_entries_are_normalized_to_int(self):
        v = HodgeVector(3, (Fraction(2), 4, Fraction(2)))
        assert v.values == (2, 4, 2)
        assert all(type(x) is int for x in v.values)


class TestHodgeVectors:
    def test_primal_hodge_numbers(self):
        assert hodge_K(2).values == (0, 0)
        assert hodge_K(3).values == (0, 1, 0)
        assert hodge_K(4).values == (0, 5, 5, 0)
        assert hodge_K(5).values == (0, 16, 46, 16, 0)

    def test_invariant_part(self):
        assert hodge_Kplus(5).values == (0, 0, 6, 0, 0)
        assert hodge_Kplus(4).values == (0, 5, 5, 0)
        assert hodge_Kplus(4) == hodge_K(4)

    def test_anti_invariant_part(self):
        assert hodge_Kminus(5).values == (0, 16, 40, 16, 0)
        assert hodge_Kminus(4).values == (0, 0, 0, 0)

    def test_totals_match_the_rank_split(self):
        for g in range(2, 9):
            ranks = rank_Kpm(g)
            assert hodge_K(g).total() == rank_K(g), g
            assert hodge_Kplus(g).total() == ranks.k_plus, g
            assert hodge_Kminus(g).total() == ranks.k_minus, g

    def test_level_bands_of_the_eigenparts(self):
        # one eigenpart stays within level g-3, the other within g-5;
        # which is which alternates with the parity of g
        for g in range(4, 9):
            plus, minus = hodge_Kplus(g), hodge_Kminus(g)
            narrow, wide = (plus, minus) if g % 2 else (minus, plus)
            if wide.level() is not None:
                assert wide.level() <= g - 3, g
            if narrow.level() is not None:
                assert narrow.level() <= g - 5, g


class TestRanks:
    def test_rank_spot_values(self):
        assert [rank_K(g) for g in (2, 3, 4, 5, 6)] == [0, 1, 10, 78, 588]

    def test_catalan_identity(self):
        for g in range(1, 21):
            assert catalan_rank_identity(g), g

    def test_eigenpart_ranks(self):
        r5 = rank_Kpm(5)
        assert (r5.k_plus, r5.k_minus) == (6, 72)
        r4 = rank_Kpm(4)
        assert (r4.k_plus, r4.k_minus) == (10, 0)

    def test_rank_pair_validation(self):
        with pytest.raises(ValueError, match="ranks must be nonnegative"):
            RankPair(5, -1, 79)
        with pytest.raises(ValueError, match="ranks do not sum"):
            RankPair(5, 6, 71)
        with pytest.raises(ValueError, match="need g >= 2"):
            rank_Kpm(1)


class TestEulerCharacteristics:
    def test_divisor_euler_characteristic(self):
        assert chi_theta(5) == 120
        assert chi_theta(4) == -24

    def test_two_torsion_count(self):
        assert two_torsion_on_theta(5) == 496
        assert two_torsion_on_theta(2) == 6

    def test_quotient_euler_characteristics(self):
        assert chi_theta_quotient(5) == (512, Fraction(308))
        assert chi_theta_quotient(2) == (8, Fraction(2))
        assert chi_theta_quotient(4) == (128, Fraction(48))
        with pytest.raises(ValueError, match="need g >= 2"):
            chi_theta_quotient(1)

    def test_sheaf_euler_characteristic_spot_values(self):
        assert chi_omega_p(5, 2) == 66
        # chi of the structure sheaf from the restriction sequence
        for g in range(2, 9):
            assert chi_omega_p(g, 0) == (-1) ** (g + 1), g

    def test_alternating_sum_telescopes_to_chi(self):
        for g in range(2, 11):
            total = sum((-1) ** p * chi_omega_p(g, p) for p in range(g))
            assert total == chi_theta(g), g

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="need 0 <= p <= g - 1"):
            chi_omega_p(5, 5)
        with pytest.raises(ValueError, match="need 0 <= p <= g - 1"):
            chi_quotient_identity(5, -1)


class TestResidues:
    def test_boundary_indicator(self):
        assert boundary_delta(5, 0) == 0
        assert boundary_delta(5, 4) == 0
        assert boundary_delta(5, 2) == 1

    def test_first_kernel_spot_value(self):
        assert chi2_residue(5, 2) == Fraction(1, 16)
        assert chi2_closed(5, 2) == Fraction(1, 16)

    def test_first_kernel_residue_matches_closed_form(self):
        for g in range(2, 9):
            for p in range(g):
                closed = chi2_closed(g, p)
                assert chi2_residue(g, p) == closed, (g, p)
                assert chi2_residue_z(g, p) == closed, (g, p)

    def test_second_kernel_spot_value(self):
        assert chi4_residue(5, 1) == Fraction(-5, 2)
        assert chi4_closed(5, 1) == Fraction(-5, 2)

    def test_second_kernel_residue_matches_closed_form(self):
        for g in range(2, 9):
            for p in range(g):
                assert chi4_residue(g, p) == chi4_closed(g, p), (g, p)

    def test_quotient_identity_full_sweep(self):
        for g in range(2, 9):
            for p in range(g):
                assert chi_quotient_identity(g, p), (g, p)


class TestTruncationOverride:
    def test_wider_window_keeps_residues_exact(self, monkeypatch):
        monkeypatch.setenv("PRYMAL_TRUNCATION", "40")
        assert chi2_residue(5, 2) == Fraction(1, 16)
        assert chi4_residue(5, 1) == Fraction(-5, 2)

    def test_invalid_override_is_reported(self, monkeypatch):
        monkeypatch.setenv("PRYMAL_TRUNCATION", "abc")
        with pytest.raises(ValueError, match="must be an integer"):
            chi2_residue(5, 2)

    def test_small_override_never_narrows_the_window(self, monkeypatch):
        monkeypatch.setenv("PRYMAL_TRUNCATION", "3")
        assert chi2_residue(5, 2) == Fraction(1, 16)
