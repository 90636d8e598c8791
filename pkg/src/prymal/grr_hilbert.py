"""Twisted Euler characteristic pipelines for the special surfaces.

Two independent routes compute the Hilbert polynomial of a component
surface with respect to the theta polarization:

* the symmetric-power route: the character of a twisting bundle on the
  sixth symmetric power of the genus-11 cover is multiplied by the
  Todd class, transferred down the double cover with the closed-form
  transfer table, corrected by the inverse Todd class of the base
  symmetric power, restricted to the plane of the degree-six system
  through its secant classes, and integrated against the Todd class of
  the plane;

* the fourfold route: a small graded algebra on an abelian-fourfold
  theta divisor (two divisor symbols and a point symbol with the
  relations xi^2 = 24 zeta, xi*omega = 8 zeta, omega^2 = 0) carries
  the same Euler characteristic through a direct Riemann-Roch
  computation, with a genus-9 curve correction subtracted at the end.

Both routes land on 20n^2 - 40n + 22 per component, and the module
also produces the self-intersection 16 of the moving surface class and
the derived totals that feed the pairing-table solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Tuple, Union

from .cover_pushforward import PushforwardTable
from .exactlinalg import LinearSystemError, solve_unique
from .polynomials import Poly
from .rational_series import PowerSeries
from .sympower_ring import (SymClass, chern_total_sympower, secant_classes,
                            todd_inverse_of, todd_of)

# the printed/golden polynomials in the twist variable n
IntPolynomial = Poly

COVER_GENUS = 11
BASE_GENUS = 6
POWER_DEGREE = 6

Coefficient = Union[int, Fraction, Poly]


# ----------------------------------------------------------------------
# the fourfold-side graded algebra

class FourfoldClassAlgebra:
    """Products of the divisor symbols xi, omega and the point symbol
    zeta on the exceptional surface inside the abelian fourfold.

    Relations: xi^2 = 24 zeta (the quartic self-degree 4! of the theta
    divisor), xi*omega = 8 zeta (forced by the half-square identity
    12 zeta + xi*omega = 20 zeta), omega^2 = 0 by adjunction (the
    ``omega_squared`` coefficient is configurable so the dependence on
    that vanishing can be exhibited symbolically), and every product of
    total degree greater than two vanishes.
    """

    XI_SQUARED_ZETA = Fraction(factorial(4))  # 24
    XI_OMEGA_ZETA = Fraction(8)               # from 12 + xi*omega = 20

    def __init__(self, omega_squared: Coefficient = Fraction(0)):
        self.omega_squared_zeta = omega_squared

    def element(self, unit=0, xi=0, omega=0, zeta=0) -> "FourfoldClass":
        return FourfoldClass(self, unit, xi, omega, zeta)

    def one(self) -> "FourfoldClass":
        return self.element(unit=1)

    def xi(self) -> "FourfoldClass":
        return self.element(xi=1)

    def omega(self) -> "FourfoldClass":
        return self.element(omega=1)

    def zeta(self) -> "FourfoldClass":
        return self.element(zeta=1)


class FourfoldClass:
    """Element  u + a xi + b omega + c zeta  of the surface algebra."""

    __slots__ = ("algebra", "unit", "xi", "omega", "zeta")

    def __init__(self, algebra: FourfoldClassAlgebra, unit=0, xi=0, omega=0,
                 zeta=0):
        def clean(v):
            return Fraction(v) if isinstance(v, int) else v
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "unit", clean(unit))
        object.__setattr__(self, "xi", clean(xi))
        object.__setattr__(self, "omega", clean(omega))
        object.__setattr__(self, "zeta", clean(zeta))

    def __setattr__(self, name, value):
        raise AttributeError("FourfoldClass is immutable")

    def __add__(self, other: "FourfoldClass") -> "FourfoldClass":
        return FourfoldClass(self.algebra, self.unit + other.unit,
                             self.xi + other.xi, self.omega + other.omega,
                             self.zeta + other.zeta)

    def __sub__(self, other: "FourfoldClass") -> "FourfoldClass":
        return self + (other * Fraction(-1))

    def __mul__(self, other) -> "FourfoldClass":
        if not isinstance(other, FourfoldClass):
            return FourfoldClass(self.algebra, self.unit * other,
                                 self.xi * other, self.omega * other,
                                 self.zeta * other)
        alg = self.algebra
        zeta = (self.unit * other.zeta + self.zeta * other.unit
                + alg.XI_SQUARED_ZETA * self.xi * other.xi
                + alg.XI_OMEGA_ZETA * (self.xi * other.omega
                                       + self.omega * other.xi)
                + alg.omega_squared_zeta * self.omega * other.omega)
        return FourfoldClass(alg, self.unit * other.unit,
                             self.unit * other.xi + self.xi * other.unit,
                             self.unit * other.omega + self.omega * other.unit,
                             zeta)

    __rmul__ = __mul__

    def nilpotent_part(self) -> "FourfoldClass":
        return FourfoldClass(self.algebra, 0, self.xi, self.omega, self.zeta)

    def exp(self) -> "FourfoldClass":
        if self.unit != 0:
            raise ValueError("exp requires zero constant term")
        return (self.algebra.one() + self
                + self * self * Fraction(1, 2))

    def inverse(self) -> "FourfoldClass":
        u = self.unit
        if not isinstance(u, Fraction) or u == 0:
            raise ValueError("inverse requires an invertible rational unit part")
        m = self.nilpotent_part() * (1 / u)
        return (self.algebra.one() - m + m * m) * (1 / u)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FourfoldClass):
            return NotImplemented
        return (self.unit == other.unit and self.xi == other.xi
                and self.omega == other.omega and self.zeta == other.zeta)

    def __repr__(self) -> str:
        return ("FourfoldClass(unit=%s, xi=%s, omega=%s, zeta=%s)"
                % (self.unit, self.xi, self.omega, self.zeta))


def _line_bundle_todd(divisor: FourfoldClass) -> FourfoldClass:
    """Todd class x/(1 - e^-x) of a line bundle with first Chern class
    ``divisor``, truncated at the surface's top degree."""
    x = PowerSeries.monomial(1, 1, 4)
    series = (1 - (-x).exp()).shift(-1).inverse()  # x/(1 - e^-x)
    one = FourfoldClass(divisor.algebra, unit=1)
    return (one * series.coefficient(0)
            + divisor * series.coefficient(1)
            + divisor * divisor * series.coefficient(2))


# ----------------------------------------------------------------------
# the fourfold route

def todd_W() -> FourfoldClass:
    """Todd class of the exceptional surface: the inverse square of the
    Todd class of the polarizing bundle, 1 - xi + 14 zeta.

    >>> td = todd_W()
    >>> (td.unit, td.xi, td.omega, td.zeta)
    (Fraction(1, 1), Fraction(-1, 1), Fraction(0, 1), Fraction(14, 1))
    """
    alg = FourfoldClassAlgebra()
    td_bundle = _line_bundle_todd(alg.xi())
    inv = td_bundle.inverse()
    return inv * inv


def phi_class(alg: Optional[FourfoldClassAlgebra] = None) -> FourfoldClass:
    """The polarizing divisor Phi = xi + omega on the surface."""
    alg = alg if alg is not None else FourfoldClassAlgebra()
    return alg.xi() + alg.omega()


def phi_square_half_two_ways() -> Tuple[Fraction, Fraction]:
    """(1/2) Phi^2 expanded directly versus via 12 zeta + xi*omega;
    both give 20 (as multiples of the point class)."""
    alg = FourfoldClassAlgebra()
    phi = phi_class(alg)
    direct = (phi * phi * Fraction(1, 2)).zeta
    via_identity = Fraction(12) + (alg.xi() * alg.omega()).zeta
    return direct, via_identity


def chi_OW_nPhi() -> Poly:
    """Euler characteristic of O_W(n Phi) on the surface by
    Riemann-Roch: the point-class part of exp(n Phi) times todd(W).

    >>> str(chi_OW_nPhi())
    '20n^2 - 32n + 14'
    """
    n = Poly.variable()
    alg = FourfoldClassAlgebra()
    character = (phi_class(alg) * n).exp()
    return Poly([0]) + (character * todd_W()).zeta


def curve_correction() -> Poly:
    """Euler characteristic of the twist restricted to the boundary
    genus-9 curve: degree 8n, so chi = 8n + 1 - 9."""
    n = Poly.variable()
    return 8 * n + 1 - 9


def hilbert_Wbar() -> Poly:
    """Per-component Hilbert polynomial via the fourfold route.

    >>> str(hilbert_Wbar())
    '20n^2 - 40n + 22'
    """
    return chi_OW_nPhi() - curve_correction()


# ----------------------------------------------------------------------
# the symmetric-power route

TODD_PLANE = (Fraction(1), Fraction(3, 2), Fraction(1))  # 1 + (3/2)h + h^2


@dataclass(frozen=True)
class HilbertSPipeline:
    """All stages of the symmetric-power route."""

    upstairs_class: SymClass          # exp(n theta~) todd(cover power)
    transferred: SymClass             # termwise transfer to the base ring
    downstairs_character: SymClass    # after the inverse base Todd class
    plane_restriction: Tuple[Poly, Poly, Poly]  # against h^0, h^1, h^2
    euler_polynomial: Poly


def _as_poly(value) -> Poly:
    return value if isinstance(value, Poly) else Poly([value])


def hilbert_S_pipeline() -> HilbertSPipeline:
    n = Poly.variable()
    theta_cover = SymClass.theta(COVER_GENUS, POWER_DEGREE)
    character = (theta_cover * n).exp()
    upstairs = character * todd_of(
        chern_total_sympower(COVER_GENUS, POWER_DEGREE))
    table = PushforwardTable.build(BASE_GENUS, POWER_DEGREE)
    transferred = table.apply(upstairs)
    downstairs = transferred * todd_inverse_of(
        chern_total_sympower(BASE_GENUS, POWER_DEGREE))
    secants = secant_classes(BASE_GENUS, POWER_DEGREE, 2)
    cycles = (secants.point.cycle, secants.pencil.cycle, secants.full.cycle)
    restriction = tuple(
        _as_poly((downstairs.graded_part(k) * cycles[k]).integrate_top())
        for k in range(3))
    chi = Poly.zero()
    for k in range(3):
        chi = chi + restriction[k] * TODD_PLANE[2 - k]
    return HilbertSPipeline(upstairs, transferred, downstairs,
                            restriction, chi)


def hilbert_S(n=None):
    """Hilbert polynomial of the double-cover surface with respect to
    the pulled-back theta divisor; evaluates when given a value.

    >>> str(hilbert_S())
    '160n^2 - 160n + 44'
    >>> hilbert_S(0)
    Fraction(44, 1)
    """
    poly = hilbert_S_pipeline().euler_polynomial
    if n is None:
        return poly
    if isinstance(n, Poly):
        # composition with a general polynomial argument
        acc = Poly.zero()
        for k, c in reversed(list(enumerate(poly.coefficients))):
            acc = acc * n + c
        return acc
    return poly(n)


def hilbert_S_half() -> Poly:
    """The same polynomial at half twist, 40n^2 - 80n + 44: the total
    over the two components lying over one curve of a triple."""
    return hilbert_S().compose_scale(Fraction(1, 2))


def hilbert_V_from_S() -> Poly:
    """Per-component Hilbert polynomial from the symmetric-power route.

    The three curves of a triple each see the sum of two of the three
    component surfaces, so the per-component polynomial solves the
    symmetric pair system x_i + x_j = (total at half twist); the unique
    solution assigns every component half the total.

    >>> str(hilbert_V_from_S())
    '20n^2 - 40n + 22'
    """
    total = hilbert_S_half()
    pair_matrix = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    coeffs = []
    for k in range(max(total.degree(), 0) + 1):
        rhs = [total.coefficient(k)] * 3
        try:
            x = solve_unique(pair_matrix, rhs)
        except LinearSystemError as exc:
            raise LinearSystemError(
                "symmetric pair system failed at degree %d: %s" % (k, exc))
        if len(set(x)) != 1:
            raise LinearSystemError(
                "symmetric pair system returned an asymmetric solution")
        coeffs.append(x[0])
    return Poly(coeffs)


# ----------------------------------------------------------------------
# self-intersection of the moving surface class

@dataclass(frozen=True)
class BlowupDecomposition:
    """The moving class pulled back to the blowup, recorded by the pair
    of ideal generators and their values in the surface algebra."""

    ideal_generators: Tuple[str, str]
    codim_two_part: FourfoldClass
    residual_part: FourfoldClass


def wtilde_decomposition() -> BlowupDecomposition:
    alg = FourfoldClassAlgebra()
    return BlowupDecomposition(
        ideal_generators=("xi^2", "xi - omega"),
        codim_two_part=alg.xi() * alg.xi(),
        residual_part=alg.xi() - alg.omega())


def self_intersection_Wtilde(omega_squared: Optional[Coefficient] = None):
    """Self-intersection of the moving surface class: the quartic
    self-degree of the theta divisor minus the self-pairing of the
    residual class on the exceptional surface,

        4! - ((xi - omega)^2 as a multiple of the point class) = 16.

    Passing a symbolic ``omega_squared`` exhibits the dependence on the
    adjunction vanishing: the result becomes 16 - s.

    >>> self_intersection_Wtilde()
    Fraction(16, 1)
    >>> str(self_intersection_Wtilde(omega_squared=Poly.variable()))
    '-n + 16'
    """
    alg = FourfoldClassAlgebra(
        omega_squared=Fraction(0) if omega_squared is None else omega_squared)
    residual = alg.xi() - alg.omega()
    correction = (residual * residual).zeta
    return Fraction(factorial(4)) - correction


# ----------------------------------------------------------------------
# derived totals feeding the pairing-table solver

def triple_total_curves() -> Fraction:
    """The pairing of a curve class against the three members of its
    coplanar triple: the degree of the polarizing divisor on the curve,
    which is the xi*omega relation of the surface algebra.

    >>> triple_total_curves()
    Fraction(8, 1)
    """
    alg = FourfoldClassAlgebra()
    return (alg.xi() * alg.omega()).zeta


def triple_total_surfaces() -> Fraction:
    """The pairing of a surface class against the three members of its
    triple: one third of the quintic self-degree 5! of the theta
    divisor on the fivefold.

    >>> triple_total_surfaces()
    Fraction(40, 1)
    """
    return Fraction(factorial(5), 3)
