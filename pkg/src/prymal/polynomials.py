"""Dense univariate polynomials over the rationals, rendered in ``n``.

The Euler characteristic pipelines produce polynomials in a twist parameter;
they are carried exactly (Fraction coefficients) and printed in the canonical
descending form used across the CLI and the service, e.g. ``20n^2 - 40n + 22``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _coerce(value) -> "Poly | None":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([Fraction(value)])
    return None


class Poly:
    """Immutable polynomial; ``coefficients[k]`` multiplies ``n**k``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar]):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def variable(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def zero(cls) -> "Poly":
        return cls([])

    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coefficient(0)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coefficients)

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def compose_scale(self, factor: Scalar) -> "Poly":
        """p(factor * n), exact."""
        f = Fraction(factor)
        return Poly([c * f ** k for k, c in enumerate(self.coefficients)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coefficients])

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly([self.coefficient(k) + other.coefficient(k)
                     for k in range(size)])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Poly([c / scalar for c in self.coefficients])

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly([1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


def format_rational(value: Scalar) -> str:
    """Canonical rendering: integers bare, fractions as a/b with b > 0."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def format_poly(p: Poly, variable: str = "n") -> str:
    """Descending powers, explicit signs: ``160n^2 - 160n + 44``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree(), -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = variable if k == 1 else f"{variable}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}{power}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
