"""Exact truncated power series and Laurent series over the rationals.

Every coefficient is a ``fractions.Fraction``; nothing in this module (or in
the packages built on top of it) touches floating point.  A series knows the
half-open window of exponents on which its coefficients are valid:
``min_degree <= k < truncation_order``.  Coefficients below ``min_degree`` are
exactly zero, coefficients at or above ``truncation_order`` are unknown, and
every operation propagates the window conservatively so that no unknown
coefficient is ever reported.

Example: the geometric series and its inverse.

>>> z = PowerSeries.monomial(1, truncation_order=6)
>>> geom = series_inverse(PowerSeries.one(6) - z)
>>> geom.coefficient(4)
Fraction(1, 1)
>>> (geom * (PowerSeries.one(6) - z)).coefficient(3)
Fraction(0, 1)

The residue extraction used by the quotient Euler characteristic identities:

>>> num = PowerSeries.constant(2, 8)
>>> den = PowerSeries.from_pairs({1: 1, 0: 2}, 8)   # w + 2
>>> s = (num * den.laurent_inverse()).shift(-3)     # 2/(w^3 (w+2))
>>> residue_at_zero(s)
Fraction(1, 4)
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: exponents this far below zero are rejected rather than silently truncated
MIN_PRINCIPAL_DEGREE = -16

#: fallback truncation order when the caller does not pass one
DEFAULT_TRUNCATION = 12

#: hard cap on the dense coefficient window (all in-scope series are tiny)
_MAX_WINDOW = 4096

_ENV_TRUNCATION = "PRYMAL_TRUNCATION"


def default_truncation() -> int:
    """Default truncation order, overridable via ``PRYMAL_TRUNCATION``."""
    raw = os.environ.get(_ENV_TRUNCATION)
    if raw is None:
        return DEFAULT_TRUNCATION
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{_ENV_TRUNCATION} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{_ENV_TRUNCATION} must be positive, got {value}")
    return value


def truncation_for(minimum: int) -> int:
    """Truncation order for a computation that needs at least ``minimum``
    orders to be exact: the ``PRYMAL_TRUNCATION`` override may raise the
    order, but never lowers it below the caller's stated floor."""
    if os.environ.get(_ENV_TRUNCATION) is None:
        return minimum
    return max(minimum, default_truncation())


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class PowerSeries:
    """A truncated Laurent series with exact rational coefficients.

    Instances are immutable.  ``coefficients[i]`` is the coefficient of
    ``z**(min_degree + i)``; the list always spans exactly the window
    ``[min_degree, truncation_order)``.
    """

    __slots__ = ("min_degree", "coefficients", "truncation_order")

    def __init__(self, coefficients: Iterable[Scalar], min_degree: int,
                 truncation_order: int):
        coeffs = [_as_fraction(c) for c in coefficients]
        if truncation_order - min_degree != len(coeffs):
            raise ValueError("coefficient list does not fill the degree window")
        if min_degree < MIN_PRINCIPAL_DEGREE:
            raise ValueError(
                f"principal part below degree {MIN_PRINCIPAL_DEGREE} rejected")
        if truncation_order - min_degree > _MAX_WINDOW:
            raise ValueError("degree window too large for dense storage")
        object.__setattr__(self, "min_degree", min_degree)
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "truncation_order", truncation_order)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, truncation_order: int | None = None) -> "PowerSeries":
        n = default_truncation() if truncation_order is None else truncation_order
        return cls([Fraction(0)] * n, 0, n)

    @classmethod
    def one(cls, truncation_order: int | None = None) -> "PowerSeries":
        return cls.constant(1, truncation_order)

    @classmethod
    def constant(cls, value: Scalar,
                 truncation_order: int | None = None) -> "PowerSeries":
        n = default_truncation() if truncation_order is None else truncation_order
        if n <= 0:
            raise ValueError("truncation order must be positive for constants")
        coeffs = [Fraction(0)] * n
        coeffs[0] = _as_fraction(value)
        return cls(coeffs, 0, n)

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1,
                 truncation_order: int | None = None) -> "PowerSeries":
        n = default_truncation() if truncation_order is None else truncation_order
        if exponent >= n:
            raise ValueError("monomial exponent at or above truncation order")
        coeffs = [Fraction(0)] * (n - exponent)
        coeffs[0] = _as_fraction(coefficient)
        return cls(coeffs, exponent, n)

    @classmethod
    def from_pairs(cls, pairs: Mapping[int, Scalar],
                   truncation_order: int | None = None) -> "PowerSeries":
        """Build a series from an exponent -> coefficient mapping."""
        n = default_truncation() if truncation_order is None else truncation_order
        lo = min(list(pairs) + [0])
        if any(k >= n for k in pairs):
            raise ValueError("exponent at or above truncation order")
        coeffs = [Fraction(0)] * (n - lo)
        for k, v in pairs.items():
            coeffs[k - lo] = _as_fraction(v)
        return cls(coeffs, lo, n)

    # ------------------------------------------------------------------
    # inspection

    def coefficient(self, exponent: int) -> Fraction:
        """Coefficient of ``z**exponent``; raises if it is beyond truncation."""
        if exponent >= self.truncation_order:
            raise ValueError(
                f"coefficient of degree {exponent} lies beyond truncation "
                f"order {self.truncation_order}")
        if exponent < self.min_degree:
            return Fraction(0)
        return self.coefficients[exponent - self.min_degree]

    def valuation(self) -> int | None:
        """Degree of the lowest known nonzero term, or None if all vanish."""
        for i, c in enumerate(self.coefficients):
            if c:
                return self.min_degree + i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def support(self) -> list[int]:
        return [self.min_degree + i for i, c in enumerate(self.coefficients) if c]

    def agrees_with(self, other: "PowerSeries") -> bool:
        """Equality of coefficients over the intersection of known windows."""
        lo = min(self.min_degree, other.min_degree)
        hi = min(self.truncation_order, other.truncation_order)
        return all(self.coefficient(k) == other.coefficient(k)
                   for k in range(lo, hi))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (self.truncation_order == other.truncation_order
                and self.agrees_with(other))

    def __hash__(self):
        return hash((self.truncation_order, tuple(self.support())))

    def __repr__(self) -> str:
        terms = []
        for k in self.support():
            c = self.coefficient(k)
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"PowerSeries({body} + O(z^{self.truncation_order}))"

    # ------------------------------------------------------------------
    # ring operations

    def _window(self, lo: int, hi: int) -> "PowerSeries":
        if hi > self.truncation_order:
            raise ValueError("window extends beyond known coefficients")
        coeffs = [self.coefficient(k) for k in range(lo, hi)]
        return PowerSeries(coeffs, lo, hi)

    def truncate(self, truncation_order: int) -> "PowerSeries":
        if truncation_order > self.truncation_order:
            raise ValueError("cannot extend a truncated series")
        if truncation_order <= self.min_degree:
            raise ValueError("truncation would leave an empty window")
        return self._window(self.min_degree, truncation_order)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``z**k`` (k may be negative)."""
        return PowerSeries(self.coefficients, self.min_degree + k,
                           self.truncation_order + k)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coefficients], self.min_degree,
                           self.truncation_order)

    def __add__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            other = PowerSeries.constant(other, self.truncation_order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        lo = min(self.min_degree, other.min_degree)
        hi = min(self.truncation_order, other.truncation_order)
        if hi <= lo:
            raise ValueError("empty degree window in addition")
        coeffs = [self.coefficient(k) + other.coefficient(k)
                  for k in range(lo, hi)]
        return PowerSeries(coeffs, lo, hi)

    __radd__ = __add__

    def __sub__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            other = PowerSeries.constant(other, self.truncation_order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PowerSeries":
        return (-self) + other

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return PowerSeries([c * x for x in self.coefficients],
                               self.min_degree, self.truncation_order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        # Unknown tail of one factor first contributes at (truncation of that
        # factor + valuation of the other), which bounds the result window.
        va = self.valuation()
        vb = other.valuation()
        va = self.min_degree if va is None else va
        vb = other.min_degree if vb is None else vb
        lo = self.min_degree + other.min_degree
        hi = min(self.truncation_order + vb, other.truncation_order + va)
        if hi <= lo:
            raise ValueError("empty degree window in multiplication")
        coeffs = [Fraction(0)] * (hi - lo)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            da = self.min_degree + i
            for j, b in enumerate(other.coefficients):
                if not b:
                    continue
                d = da + other.min_degree + j
                if d >= hi:
                    break
                coeffs[d - lo] += a * b
        return PowerSeries(coeffs, lo, hi)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PowerSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.laurent_inverse() ** (-n)
        result = PowerSeries.one(self.truncation_order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # the operations named by the verification pipelines

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse of a series with nonzero constant term."""
        v = self.valuation()
        if v is not None and v < 0:
            raise ValueError(
                "series_inverse: principal part present; use laurent_inverse")
        if self.coefficient(0) == 0:
            raise ValueError("series_inverse: zero constant term")
        return self._unit_inverse()

    def laurent_inverse(self) -> "PowerSeries":
        """Inverse of a Laurent series with nonzero leading coefficient.

        Factor z^v out of the series, invert the unit part, and shift back.
        This is deliberately a separate entry point from :meth:`inverse`,
        whose contract requires an invertible constant term.
        """
        v = self.valuation()
        if v is None:
            raise ValueError("series_inverse: zero constant term")
        unit = self.shift(-v)
        return unit._unit_inverse().shift(-v)

    def _unit_inverse(self) -> "PowerSeries":
        c0 = self.coefficient(0)
        n = self.truncation_order
        inv = [Fraction(0)] * n
        inv[0] = Fraction(1) / c0
        for k in range(1, n):
            acc = Fraction(0)
            for j in range(1, k + 1):
                a = self.coefficient(j)
                if a:
                    acc += a * inv[k - j]
            inv[k] = -acc / c0
        return PowerSeries(inv, 0, n)

    def exp(self) -> "PowerSeries":
        """Exponential of a series with strictly positive valuation."""
        v = self.valuation()
        if self.min_degree < 1 and not (v is None or v >= 1):
            raise ValueError("exp of unit-shifted series unsupported")
        n = self.truncation_order
        result = PowerSeries.one(n)
        term = PowerSeries.one(n)
        positive = self._window(max(self.min_degree, 1), n)
        for k in range(1, n):
            term = (term * positive) * Fraction(1, k)
            if term.is_zero():
                break
            result = result + term
        return result._window(0, n)

    def log(self) -> "PowerSeries":
        """Logarithm of a series with constant term 1."""
        if self.coefficient(0) != 1 or (self.valuation() or 0) < 0:
            raise ValueError("series_log requires constant term 1")
        n = self.truncation_order
        u = self - 1
        result = PowerSeries.zero(n)
        term = PowerSeries.one(n)
        for k in range(1, n):
            term = term * u
            if term.is_zero():
                break
            result = result + term * Fraction((-1) ** (k + 1), k)
        return result._window(0, n)

    def substitute(self, inner: "PowerSeries") -> "PowerSeries":
        """Composition self(inner); ``inner`` must have positive valuation."""
        v = inner.valuation()
        if inner.coefficient(0) != 0 or (v is not None and v < 1):
            raise ValueError("substitute: inner series has a constant term")
        if v is None:
            # composing with 0: only the constant term survives
            return PowerSeries.constant(self.coefficient(0),
                                        inner.truncation_order)
        hi = min(inner.truncation_order, self.truncation_order * v)
        if hi < 1:
            raise ValueError("insufficient precision")
        acc = PowerSeries.zero(hi)
        # regular part by Horner's scheme over the known window
        for k in range(self.truncation_order - 1, -1, -1):
            acc = acc * inner._window(inner.min_degree, hi)
            c = self.coefficient(k)
            if c:
                acc = acc + c
            acc = acc._window(min(acc.min_degree, 0), hi)
        if self.min_degree < 0:
            inv = inner.laurent_inverse()
            for k in range(-1, self.min_degree - 1, -1):
                c = self.coefficient(k)
                if c:
                    acc = acc + c * inv ** (-k)
        return acc

    def residue(self) -> Fraction:
        """Coefficient of z^{-1}."""
        if self.truncation_order <= -1:
            raise ValueError("insufficient precision")
        return self.coefficient(-1)


# ----------------------------------------------------------------------
# free-function spellings used throughout the verification suites

def series_exp(s: PowerSeries) -> PowerSeries:
    return s.exp()


def series_inverse(s: PowerSeries) -> PowerSeries:
    return s.inverse()


def series_log(s: PowerSeries) -> PowerSeries:
    return s.log()


def substitute(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    return s.substitute(t)


def residue_at_zero(s: PowerSeries) -> Fraction:
    return s.residue()


def exp_of_monomial(scale: Scalar, exponent: int,
                    truncation_order: int | None = None) -> PowerSeries:
    """exp(scale * z^exponent), a convenience for e^{nz}-type factors."""
    return PowerSeries.monomial(exponent, scale, truncation_order).exp()
