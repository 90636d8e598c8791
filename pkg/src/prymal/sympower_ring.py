"""The (eta, theta) subring of the cohomology of a symmetric power of a curve.

For a genus-g curve C, the cohomology of the d-th symmetric power C^(d)
contains a distinguished subring generated by eta (the class of the divisor
C^(d-1) + point) and theta (the pullback of the principal polarization of the
Jacobian).  Monomials eta^a theta^b with a+b <= d and b <= g span it, the top
degree evaluates by

    integral of eta^(d-k) theta^k over C^(d)  =  g!/(g-k)!,

and the total Chern class of C^(d) is (1+eta)^(d-g+1) exp(-theta/(1+eta)).
This module carries exact SymClass arithmetic, the evaluation functional,
Todd classes computed through Newton identities (no root splitting), and the
secant-plane classes of linear systems.

Coefficients may be Fractions or exact polynomials in a twist parameter
(`prymal.polynomials.Poly`); the ring operations only need +, -, * and
division by rational scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .rational_series import PowerSeries

Monomial = tuple[int, int]


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction))


class SymClass:
    """An element  sum c_{ab} eta^a theta^b  of the subring for fixed (g, d).

    Immutable; zero coefficients are never stored, and monomials outside the
    ring (a+b > d or b > g) are dropped on construction because they vanish.
    """

    __slots__ = ("genus", "degree", "coefficients")

    def __init__(self, genus: int, degree: int, coefficients: Mapping[Monomial, object]):
        if genus < 0 or degree < 0:
            raise ValueError("genus and degree must be nonnegative")
        clean = {}
        for (a, b), c in coefficients.items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial {(a, b)}")
            if a + b > degree or b > genus:
                continue
            if _is_scalar(c):
                c = Fraction(c)
            if c:
                clean[(a, b)] = c
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymClass is immutable")

    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, g: int, d: int) -> "SymClass":
        return cls(g, d, {})

    @classmethod
    def one(cls, g: int, d: int) -> "SymClass":
        return cls(g, d, {(0, 0): Fraction(1)})

    @classmethod
    def eta(cls, g: int, d: int) -> "SymClass":
        return cls(g, d, {(1, 0): Fraction(1)})

    @classmethod
    def theta(cls, g: int, d: int) -> "SymClass":
        return cls(g, d, {(0, 1): Fraction(1)})

    def coefficient(self, a: int, b: int):
        return self.coefficients.get((a, b), Fraction(0))

    def constant_term(self):
        return self.coefficient(0, 0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def graded_part(self, k: int) -> "SymClass":
        """The total-degree-k component (cohomological degree 2k)."""
        return SymClass(self.genus, self.degree,
                        {m: c for m, c in self.coefficients.items()
                         if m[0] + m[1] == k})

    def max_total_degree(self) -> int:
        return max((a + b for a, b in self.coefficients), default=0)

    def _check_compatible(self, other: "SymClass"):
        if self.genus != other.genus or self.degree != other.degree:
            raise ValueError("SymClass operands live in different rings")

    # ------------------------------------------------------------------

    def __neg__(self) -> "SymClass":
        return SymClass(self.genus, self.degree,
                        {m: -c for m, c in self.coefficients.items()})

    def __add__(self, other) -> "SymClass":
        if _is_scalar(other):
            other = SymClass(self.genus, self.degree, {(0, 0): other})
        if not isinstance(other, SymClass):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coefficients)
        for m, c in other.coefficients.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SymClass(self.genus, self.degree, out)

    __radd__ = __add__

    def __sub__(self, other) -> "SymClass":
        if _is_scalar(other):
            other = SymClass(self.genus, self.degree, {(0, 0): other})
        if not isinstance(other, SymClass):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SymClass":
        return (-self) + other

    def __mul__(self, other) -> "SymClass":
        if not isinstance(other, SymClass):
            # scalar or Poly coefficient
            return SymClass(self.genus, self.degree,
                            {m: c * other for m, c in self.coefficients.items()})
        self._check_compatible(other)
        out: dict[Monomial, object] = {}
        d, g = self.degree, self.genus
        for (a1, b1), c1 in self.coefficients.items():
            for (a2, b2), c2 in other.coefficients.items():
                a, b = a1 + a2, b1 + b2
                if a + b > d or b > g:
                    continue
                key = (a, b)
                prod = c1 * c2
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return SymClass(self.genus, self.degree, out)

    def __rmul__(self, other) -> "SymClass":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "SymClass":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = SymClass.one(self.genus, self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "SymClass":
        """Inverse of a unit; requires a nonzero rational constant term."""
        c0 = self.constant_term()
        if _is_scalar(c0):
            c0 = Fraction(c0)
        if not isinstance(c0, Fraction) or not c0:
            raise ValueError("SymClass inverse requires a nonzero rational "
                             "constant term")
        # Neumann series in the nilpotent part: 1/(c0(1+u)) = (1-u+u^2-...)/c0
        u = self * (Fraction(1) / c0) - 1
        result = SymClass.one(self.genus, self.degree)
        term = SymClass.one(self.genus, self.degree)
        sign = 1
        while True:
            term = term * u
            if term.is_zero():
                break
            sign = -sign
            result = result + term * Fraction(sign)
        return result * (Fraction(1) / c0)

    def exp(self) -> "SymClass":
        """exp of a class with zero constant term (nilpotent argument)."""
        if self.constant_term():
            raise ValueError("SymClass exp requires zero constant term")
        result = SymClass.one(self.genus, self.degree)
        term = SymClass.one(self.genus, self.degree)
        k = 0
        while True:
            k += 1
            term = term * self * Fraction(1, k)
            if term.is_zero():
                break
            result = result + term
        return result

    # ------------------------------------------------------------------

    def integrate_top(self):
        """Evaluate against the fundamental class of C^(d)."""
        total = Fraction(0)
        for (a, b), c in self.coefficients.items():
            if a + b == self.degree:
                total = c * eval_integral(self.genus, self.degree, a, b) + total
        return total

    def pair_with(self, other: "SymClass"):
        return (self * other).integrate_top()

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            other = SymClass(self.genus, self.degree, {(0, 0): other})
        if not isinstance(other, SymClass):
            return NotImplemented
        return (self.genus, self.degree) == (other.genus, other.degree) \
            and (self - other).is_zero()

    def __hash__(self):
        return hash((self.genus, self.degree, frozenset(self.coefficients)))

    def __repr__(self) -> str:
        if self.is_zero():
            return "SymClass(0)"
        parts = []
        for (a, b) in sorted(self.coefficients):
            c = self.coefficients[(a, b)]
            mono = "".join((f"eta^{a}" if a > 1 else "eta" if a else "",
                            f"theta^{b}" if b > 1 else "theta" if b else ""))
            parts.append(f"({c}){mono}" if mono else f"({c})")
        return "SymClass(" + " + ".join(parts) + ")"


def eval_integral(g: int, d: int, a: int, b: int) -> Fraction:
    """The evaluation rule for top-degree monomials of C^(d).

    integral of eta^a theta^b = g!/(g-b)! when a+b = d and b <= g; monomials
    with b > g vanish.
    """
    if a + b != d:
        raise ValueError("not a top-degree monomial")
    if b > g:
        return Fraction(0)
    return Fraction(factorial(g), factorial(g - b))


def chern_total_sympower(g: int, d: int) -> SymClass:
    """Total Chern class of C^(d): (1+eta)^(d-g+1) exp(-theta/(1+eta))."""
    if g < 0 or d < 1:
        raise ValueError("need g >= 0 and d >= 1")
    one = SymClass.one(g, d)
    eta = SymClass.eta(g, d)
    theta = SymClass.theta(g, d)
    return (one + eta) ** (d - g + 1) * (-theta * (one + eta) ** (-1)).exp()


def _todd_log_coefficients(order: int) -> list[Fraction]:
    """Coefficients f_1..f_order of log(x / (1 - e^-x)) as a power series."""
    n = order + 2
    x = PowerSeries.monomial(1, 1, n)
    u = ((1 - (-x).exp()).shift(-1))  # (1 - e^-x)/x, a unit
    f = -(u._window(0, n - 1).log())
    return [f.coefficient(k) for k in range(1, order + 1)]


def _power_sums(c: SymClass) -> list[SymClass]:
    """Power sums of the Chern roots from the elementary parts, by Newton.

    p_k = sum_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k, with e_k the
    total-degree-k component of the total Chern class.
    """
    d = c.degree
    e = [c.graded_part(k) for k in range(d + 1)]
    p: list[SymClass] = [SymClass.zero(c.genus, d)]  # p_0 unused
    for k in range(1, d + 1):
        acc = e[k] * (Fraction((-1) ** (k - 1)) * k)
        for i in range(1, k):
            acc = acc + e[i] * p[k - i] * Fraction((-1) ** (i - 1))
        p.append(acc)
    return p


def todd_of(c: SymClass) -> SymClass:
    """Todd class from a total Chern class, via Newton identities."""
    if c.constant_term() != 1:
        raise ValueError("todd_of requires constant term 1")
    p = _power_sums(c)
    f = _todd_log_coefficients(c.degree)
    log_td = SymClass.zero(c.genus, c.degree)
    for k in range(1, c.degree + 1):
        log_td = log_td + p[k] * f[k - 1]
    return log_td.exp()


def todd_inverse_of(c: SymClass) -> SymClass:
    """Inverse Todd class; same contract as todd_of."""
    if c.constant_term() != 1:
        raise ValueError("todd_of requires constant term 1")
    p = _power_sums(c)
    f = _todd_log_coefficients(c.degree)
    log_td = SymClass.zero(c.genus, c.degree)
    for k in range(1, c.degree + 1):
        log_td = log_td + p[k] * f[k - 1]
    return (-log_td).exp()


@dataclass(frozen=True)
class ProjClass:
    """Class of a linear subspace of a linear system inside C^(d)."""
    dimension: int
    cycle: SymClass


@dataclass(frozen=True)
class SecantClasses:
    full: ProjClass
    pencil: ProjClass
    point: ProjClass


def linear_system_class(g: int, d: int, r: int) -> SymClass:
    """Class in C^(d) of the divisors moving in an r-dimensional system.

    The secant-plane formula, specialized to the cycle of divisors of a
    g^r_d itself:

        sum_{j=0}^{r} (-1)^(r+j) C(g-1-j, r-j) eta^(d-r-j) theta^j / j!

    Sanity anchors: r=0 gives the point class eta^d; g=0 gives the linear
    subspace classes eta^(d-r) of projective space; g=2, d=2, r=1 gives
    theta - eta, the exceptional curve of C^(2) -> Jac with square -1.
    """
    if r < 0:
        raise ValueError("linear system dimension must be nonnegative")
    if d - r < 0:
        raise ValueError("system dimension exceeds degree")
    coeffs: dict[Monomial, Fraction] = {}
    for j in range(r + 1):
        if d - r - j < 0:  # eta would need a negative exponent: term is 0
            continue
        c = _binom(g - 1 - j, r - j)
        if not c:
            continue
        coeffs[(d - r - j, j)] = Fraction((-1) ** (r + j) * c, factorial(j))
    return SymClass(g, d, coeffs)


def _binom(n: int, k: int) -> int:
    """Binomial coefficient extended to negative upper index."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def secant_classes(g: int, d: int, r: int) -> SecantClasses:
    """Classes of the full system, a pencil in it, and a point, in C^(d)."""
    if r < 0:
        raise ValueError("linear system dimension must be nonnegative")
    full = linear_system_class(g, d, r)
    pencil = linear_system_class(g, d, 1) if r >= 1 else full
    point = linear_system_class(g, d, 0)
    return SecantClasses(full=ProjClass(r, full),
                         pencil=ProjClass(min(r, 1), pencil),
                         point=ProjClass(0, point))
