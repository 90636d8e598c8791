"""Hodge-theoretic counts for the theta divisor of a principally
polarized abelian g-fold and for the primal part of its middle
cohomology (the kernel of the pushforward to the abelian variety).

Everything here is finite combinatorics: eulerian numbers, binomial
rearrangements, and exact Laurent-series residues.  Each printed
quantity is computed by at least two independent routes (closed
formula against recurrence, Hodge decomposition against Euler
characteristic, residue against closed form), and the public functions
raise or return False whenever the routes disagree, so agreement is a
genuine check rather than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Tuple

from .rational_series import PowerSeries, residue_at_zero, truncation_for


def _binom(n: int, k: int) -> int:
    """Binomial coefficient with the combinatorial convention that out
    of range indices give 0 (math.comb raises on negative k)."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def eulerian(g: int, p: int) -> int:
    """Eulerian number: permutations of g letters with p descents, by
    the alternating binomial sum.

    >>> eulerian(5, 2)
    66
    """
    if not 0 <= p < g:
        raise ValueError("descent count p out of range: need 0 <= p < g")
    total = 0
    for k in range(p + 1):
        total += comb(g + 1, k) * (-1) ** k * (p + 1 - k) ** g
    return total


def eulerian_by_recurrence(g: int, p: int) -> int:
    """The same number by the standard two-term recurrence
    A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1); an independent
    oracle for the alternating sum."""
    if not 0 <= p < g:
        raise ValueError("descent count p out of range: need 0 <= p < g")
    row = [1]
    for n in range(2, g + 1):
        row = [(k + 1) * (row[k] if k < len(row) else 0)
               + (n - k) * (row[k - 1] if 0 <= k - 1 < len(row) else 0)
               for k in range(n)]
    return row[p]


@dataclass(frozen=True)
class HodgeVector:
    """Hodge numbers h^{p, g-1-p} for p = 0 .. g-1; validated to be
    symmetric nonnegative integers."""

    g: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("need g >= 2")
        if len(self.values) != self.g:
            raise ValueError("formula inconsistency: expected %d entries"
                             % self.g)
        cleaned = []
        for v in self.values:
            f = Fraction(v)
            if f.denominator != 1:
                raise ValueError("formula inconsistency: non-integer entry %s"
                                 % f)
            if f < 0:
                raise ValueError("formula inconsistency: negative entry %s"
                                 % f)
            cleaned.append(int(f))
        if cleaned != cleaned[::-1]:
            raise ValueError("formula inconsistency: vector is not symmetric")
        object.__setattr__(self, "values", tuple(cleaned))

    def total(self) -> int:
        return sum(self.values)

    def level(self):
        """Largest |p - q| over nonzero entries h^{p,q}; None when the
        vector vanishes identically."""
        spread = [abs(2 * p - (self.g - 1))
                  for p, v in enumerate(self.values) if v]
        return max(spread) if spread else None


def hodge_K(g: int) -> HodgeVector:
    """Hodge numbers of the primal cohomology.

    >>> hodge_K(5).values
    (0, 16, 46, 16, 0)
    """
    values = [eulerian(g, p) - _binom(g, p) * _binom(g - 1, p)
              + _binom(g, p + 1) * _binom(g - 1, p - 1)
              for p in range(g)]
    return HodgeVector(g, tuple(values))


def _epsilon(k: int) -> Fraction:
    """1 for even k, 0 for odd k."""
    return Fraction(1 + (-1) ** k, 2)


def hodge_Kplus(g: int) -> HodgeVector:
    """Hodge numbers of the part of the primal cohomology fixed by the
    sign involution.

    >>> hodge_Kplus(5).values
    (0, 0, 6, 0, 0)
    """
    values = []
    for p in range(g):
        if p == 0 or p == g - 1:
            values.append(Fraction(0))
            continue
        first = comb(g, p) * sum(comb(g, q) * _epsilon(p + q)
                                 for q in range(g - p))
        second = comb(g, p + 1) * sum(comb(g, q + 1) * _epsilon(p + q)
                                      for q in range(g - p, g))
        third = comb(g - 1, p) * Fraction(2 ** g - 1, 2)
        values.append(Fraction(eulerian(g, p), 2)
                      + (-1) ** g * (first + second - third))
    return HodgeVector(g, tuple(values))


def hodge_Kminus(g: int) -> HodgeVector:
    """Hodge numbers of the anti-invariant part: the difference of the
    two vectors above, validated to be nonnegative."""
    k, kp = hodge_K(g), hodge_Kplus(g)
    return HodgeVector(g, tuple(a - b for a, b in zip(k.values, kp.values)))


@dataclass(frozen=True)
class RankPair:
    """Dimensions of the invariant and anti-invariant parts."""

    g: int
    k_plus: int
    k_minus: int

    def __post_init__(self):
        if self.k_plus < 0 or self.k_minus < 0:
            raise ValueError("ranks must be nonnegative")
        if self.k_plus + self.k_minus != rank_K(self.g):
            raise ValueError("ranks do not sum to the primal rank")


def rank_K(g: int) -> int:
    """Rank of the primal cohomology: g! + C(2g, g+1) - C(2g, g).

    >>> rank_K(5)
    78
    """
    return factorial(g) + comb(2 * g, g + 1) - comb(2 * g, g)


def catalan_rank_identity(g: int) -> bool:
    """The same rank written as g! - C(2g, g)/(g + 1); equality with
    rank_K is a Catalan-number identity."""
    return factorial(g) - Fraction(comb(2 * g, g), g + 1) == rank_K(g)


def rank_Kpm(g: int) -> RankPair:
    """Dimensions of the (+1)- and (-1)-eigenparts, with the printed
    parity split.

    >>> r = rank_Kpm(5); (r.k_plus, r.k_minus)
    (6, 72)
    """
    if g < 2:
        raise ValueError("need g >= 2")
    half = Fraction(factorial(g), 2)
    swing = 2 ** (g - 2) * (2 ** g + 1)
    if g % 2 == 0:
        minus = half + (-1) ** (g - 1) * swing + comb(2 * g, g + 1)
        plus = half + (-1) ** g * swing - comb(2 * g, g)
    else:
        minus = half + (-1) ** (g - 1) * swing - comb(2 * g, g)
        plus = half + (-1) ** g * swing + comb(2 * g, g + 1)
    if plus.denominator != 1 or minus.denominator != 1:
        raise ValueError("formula inconsistency: non-integer rank")
    return RankPair(g, int(plus), int(minus))


# ----------------------------------------------------------------------
# Euler characteristics of the quotients

def chi_theta(g: int) -> int:
    """Topological Euler characteristic of the theta divisor."""
    return (-1) ** (g - 1) * factorial(g)


def two_torsion_on_theta(g: int) -> int:
    """Number of two-torsion points lying on the theta divisor:
    2^{g-1} (2^g - 1), the count of even theta characteristics' odd
    partners."""
    return 2 ** (g - 1) * (2 ** g - 1)


def chi_theta_quotient(g: int) -> Tuple[int, Fraction]:
    """Euler characteristics of the quotients by the sign involution:
    (chi of the quotient abelian variety, chi of the quotient theta
    divisor).  The second value is recomputed independently from the
    fixed-point count and must agree.

    >>> chi_theta_quotient(5)
    (512, Fraction(308, 1))
    """
    if g < 2:
        raise ValueError("need g >= 2")
    chi_a_plus = 2 ** (2 * g - 1)
    direct = (Fraction((-1) ** (g - 1) * factorial(g), 2)
              + 2 ** (g - 2) * (2 ** g - 1))
    via_fixed_points = Fraction(chi_theta(g) + two_torsion_on_theta(g), 2)
    if direct != via_fixed_points:
        raise ValueError(
            "quotient Euler characteristic routes disagree: %s vs %s"
            % (direct, via_fixed_points))
    return chi_a_plus, direct


def chi_omega_p(g: int, p: int) -> int:
    """Euler characteristic of the p-th sheaf of differentials on the
    theta divisor, by the closed alternating sum, cross-checked
    against the Hodge-decomposition rearrangement.

    >>> chi_omega_p(5, 2)
    66
    """
    if not 0 <= p <= g - 1:
        raise ValueError("need 0 <= p <= g - 1")
    direct = sum(comb(g + 1, k) * (-1) ** (p + 1 - k) * (k - p - 1) ** g
                 for k in range(p + 1))
    h_k = hodge_K(g).values[p]
    rearranged = ((-1) ** (g - 1 - p) * (h_k + _binom(g, p) * _binom(g - 1, p))
                  + (-1) ** (g - p) * _binom(g, p + 1) * _binom(g - 1, p - 1))
    if direct != rearranged:
        raise ValueError(
            "Euler characteristic routes disagree at (g=%d, p=%d): %s vs %s"
            % (g, p, direct, rearranged))
    return direct


# ----------------------------------------------------------------------
# residue cross-checks

def boundary_delta(g: int, p: int) -> int:
    """The indicator that p is interior: 0 at p = 0 and p = g-1, else 1."""
    return 0 if p in (0, g - 1) else 1


def _truncation(g: int) -> int:
    # the Laurent inversions consume about 2(g-1) orders of window;
    # PRYMAL_TRUNCATION may widen the window but never narrow it
    return truncation_for(2 * g + 6)


def chi2_residue(g: int, p: int) -> Fraction:
    """Residue at 0 of 2 (w+1)^{g-1-p} / (w^g (w+2)).

    >>> chi2_residue(5, 2)
    Fraction(1, 16)
    """
    n = _truncation(g)
    w = PowerSeries.monomial(1, 1, n)
    numerator = (1 + w) ** (g - 1 - p) * 2
    series = numerator * (2 + w).inverse()
    return residue_at_zero(series.shift(-g))


def chi2_residue_z(g: int, p: int) -> Fraction:
    """The same residue after the substitution w = e^z - 1 (whose
    Jacobian e^z is absorbed into the exponential factor):
    residue at 0 of 2 e^{(g-p) z} / ((e^z - 1)^g (e^z + 1))."""
    n = _truncation(g)
    z = PowerSeries.monomial(1, 1, n)
    ez = z.exp()
    numerator = ((g - p) * z).exp() * 2
    denominator = (ez - 1) ** g * (ez + 1)
    return residue_at_zero(numerator * denominator.laurent_inverse())


def chi2_closed(g: int, p: int) -> Fraction:
    """Closed form (-1)^p / 2^{g-1}."""
    return Fraction((-1) ** p, 2 ** (g - 1))


def chi4_residue(g: int, p: int) -> Fraction:
    """Residue at 0 of the two-sum integrand

        ( sum_{k=0}^{p}   (-1)^{p-k} C(g-1,k) e^{(g-1-k) z}
        + sum_{k=0}^{p-1} (-1)^{p-k} C(g-1,k) e^{(g-k) z} )
        * 2 / ((e^z - 1)^{g-1} (e^z + 1)).
    """
    n = _truncation(g)
    z = PowerSeries.monomial(1, 1, n)
    ez = z.exp()
    acc = PowerSeries.zero(n)
    for k in range(p + 1):
        acc = acc + (-1) ** (p - k) * comb(g - 1, k) * ((g - 1 - k) * z).exp()
    for k in range(p):
        acc = acc + (-1) ** (p - k) * comb(g - 1, k) * ((g - k) * z).exp()
    denominator = (ez - 1) ** (g - 1) * (ez + 1)
    return residue_at_zero(acc * 2 * denominator.laurent_inverse())


def chi4_closed(g: int, p: int) -> Fraction:
    """Closed form (-1)^p C(g-1,p) / 2^{g-2} + 2 (-1)^p delta_p, used
    as a second oracle only."""
    return (Fraction((-1) ** p * comb(g - 1, p), 2 ** (g - 2))
            + 2 * (-1) ** p * boundary_delta(g, p))


def chi_quotient_identity(g: int, p: int) -> bool:
    """First-principles check of the two-term decomposition of twice
    the quotient Euler characteristic:

        chi1 + chi3 = chi(Omega^p) + (-1)^p (2^g - 1) (C(g-1,p)
                                                       + 2^g delta_p)

    with chi1 = chi(Omega^p) - C(g-1,p) N chi2 and chi3 = N chi4 for
    N = 2^{g-1}(2^g - 1), both chi2 and chi4 evaluated as residues and
    compared against their closed forms.

    >>> chi_quotient_identity(5, 2)
    True
    """
    if not 0 <= p <= g - 1:
        raise ValueError("need 0 <= p <= g - 1")
    chi2 = chi2_residue(g, p)
    if chi2 != chi2_closed(g, p) or chi2 != chi2_residue_z(g, p):
        return False
    chi4 = chi4_residue(g, p)
    if chi4 != chi4_closed(g, p):
        return False
    chi_om = chi_omega_p(g, p)
    count = two_torsion_on_theta(g)
    chi1 = chi_om - comb(g - 1, p) * count * chi2
    chi3 = count * chi4
    rhs = chi_om + (-1) ** p * (2 ** g - 1) * (comb(g - 1, p)
                                               + 2 ** g * boundary_delta(g, p))
    return chi1 + chi3 == rhs
