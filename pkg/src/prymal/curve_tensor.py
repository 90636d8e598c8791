"""Tensor model for the cohomology of products of a curve.

H*(C) for a genus g curve is modeled on the basis 1, a_1..a_g,
b_1..b_g, w with the only nonzero products of positive degree being
a_i b_i = w and b_i a_i = -w.  H*(C^d) is the d-fold graded tensor
power; a class is stored as a dict mapping a tuple of per-slot basis
codes to a rational coefficient, and products carry the usual sign
(x1 x tensor ... ) (y1 tensor ...) = (-1)^{sum_{i<j} |y_i||x_j|}
(x1 y1 tensor ...).

Two distinguished symmetric classes generate everything this package
needs: eta, the sum of the point class over the slots, and theta, the
sum over i of (sum_k a_i in slot k)(sum_l b_i in slot l).  Integrals
over the d-th symmetric power are read off as the coefficient of the
all-point monomial divided by d factorial.

A double cover model pairs a genus g base with a genus 2g - 1 cover
and carries transfer maps on basis codes: the invariant symplectic
pair pushes as a~_1 -> 2 a_1, b~_1 -> b_1, the remaining pairs fold in
twos onto the base pairs 2..g, the unit pushes to 2 and the point
class to the point class.  Pullback is adjoint to this under the
intersection pairing, doubling the point class.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exactlinalg import IncrementalRref, LinearSystemError, solve_unique


class CurveModel:
    """Basis codes and slotwise products for one curve factor.

    Codes: 0 is the unit, 1..g the a_i, g+1..2g the b_i, 2g+1 the
    point class.
    """

    __slots__ = ("genus", "point", "degree", "table")

    def __init__(self, genus: int):
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        self.genus = genus
        self.point = 2 * genus + 1
        ncodes = 2 * genus + 2
        degree = [1] * ncodes
        degree[0] = 0
        degree[self.point] = 2
        self.degree = degree
        table = [[None] * ncodes for _ in range(ncodes)]
        for c in range(ncodes):
            table[0][c] = (1, c)
            table[c][0] = (1, c)
        for i in range(1, genus + 1):
            table[i][genus + i] = (1, self.point)
            table[genus + i][i] = (-1, self.point)
        self.table = table

    def alpha(self, i: int) -> int:
        return i

    def beta(self, i: int) -> int:
        return self.genus + i


def unit_element(d: int) -> dict:
    return {(0,) * d: Fraction(1)}


def scale(u: dict, c) -> dict:
    c = Fraction(c)
    if c == 0:
        return {}
    return {k: v * c for k, v in u.items()}


def add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, Fraction(0)) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def mul(model: CurveModel, u: dict, v: dict) -> dict:
    degree = model.degree
    table = model.table
    out = {}
    for xs, cx in u.items():
        n = len(xs)
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = suffix[i + 1] + degree[xs[i]]
        for ys, cy in v.items():
            sign = 1
            prod = []
            for i in range(n):
                yc = ys[i]
                if degree[yc] & 1 and suffix[i + 1] & 1:
                    sign = -sign
                entry = table[xs[i]][yc]
                if entry is None:
                    prod = None
                    break
                s, code = entry
                if s < 0:
                    sign = -sign
                prod.append(code)
            if prod is None:
                continue
            key = tuple(prod)
            coeff = out.get(key, Fraction(0)) + sign * cx * cy
            if coeff:
                out[key] = coeff
            else:
                out.pop(key, None)
    return out


def power(model: CurveModel, u: dict, k: int, d: int) -> dict:
    if k < 0:
        raise ValueError("negative power")
    out = unit_element(d)
    for _ in range(k):
        out = mul(model, out, u)
    return out


def eta_class(model: CurveModel, d: int) -> dict:
    out = {}
    for k in range(d):
        key = tuple(model.point if j == k else 0 for j in range(d))
        out[key] = Fraction(1)
    return out


def theta_class(model: CurveModel, d: int) -> dict:
    out = {}
    for i in range(1, model.genus + 1):
        xi = {}
        zeta = {}
        for k in range(d):
            xi[tuple(model.alpha(i) if j == k else 0 for j in range(d))] = Fraction(1)
            zeta[tuple(model.beta(i) if j == k else 0 for j in range(d))] = Fraction(1)
        out = add(out, mul(model, xi, zeta))
    return out


_SYM_CACHE = {}


def sym_monomial(genus: int, d: int, a: int, b: int) -> dict:
    """The class eta^a theta^b on the d-fold product.  Cached; treat
    the returned dict as read-only."""
    key = (genus, d, a, b)
    cached = _SYM_CACHE.get(key)
    if cached is not None:
        return cached
    model = CurveModel(genus)
    out = mul(model,
              power(model, eta_class(model, d), a, d),
              power(model, theta_class(model, d), b, d))
    _SYM_CACHE[key] = out
    return out


def fundamental_coefficient(model: CurveModel, d: int, u: dict) -> Fraction:
    return u.get((model.point,) * d, Fraction(0))


def integral_oracle(g: int, d: int, a: int, b: int) -> Fraction:
    """Integral of eta^a theta^b over the d-th symmetric power, found
    by brute expansion in the tensor model.

    >>> integral_oracle(1, 1, 0, 1)
    Fraction(1, 1)
    >>> integral_oracle(2, 2, 0, 2)
    Fraction(2, 1)
    """
    if a + b != d:
        raise ValueError("not a top-degree monomial")
    model = CurveModel(g)
    total = sym_monomial(g, d, a, b)
    return fundamental_coefficient(model, d, total) / factorial(d)


def express_in_eta_theta(genus: int, d: int, u: dict, degree: int) -> dict:
    """Write a symmetric class as a combination of eta^a theta^b of the
    given total degree.

    The monomial list is ordered by increasing theta degree and only a
    maximal independent prefix subset participates, which makes the
    answer canonical when the monomials satisfy relations.  Every
    tensor coordinate of the input is matched exactly; a class outside
    the span raises LinearSystemError.
    """
    monos = [(degree - l, l) for l in range(min(degree, genus) + 1)]
    basis = [sym_monomial(genus, d, a, b) for a, b in monos]
    keys = sorted(set().union(u, *basis))
    index = {k: i for i, k in enumerate(keys)}

    rref = IncrementalRref()
    kept = []
    for j, vec in enumerate(basis):
        row = {index[k]: c for k, c in vec.items()}
        if row and rref.add_row(row, 0) is not None:
            kept.append(j)

    rows = [[basis[j].get(k, Fraction(0)) for j in kept] for k in keys]
    rhs = [u.get(k, Fraction(0)) for k in keys]
    coeffs = solve_unique(rows, rhs) if kept else []
    if not kept:
        if any(rhs):
            raise LinearSystemError("class outside the eta theta span")
        return {}
    return {monos[j]: c for j, c in zip(kept, coeffs) if c != 0}


class DoubleCoverModel:
    """Transfer maps for a connected unramified double cover."""

    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError("base genus must be at least 1")
        self.genus = genus
        self.base = CurveModel(genus)
        self.cover = CurveModel(2 * genus - 1)
        g = genus
        h = 2 * g - 1
        push = {0: (Fraction(2), 0),
                self.cover.point: (Fraction(1), self.base.point)}
        pull = {0: ((Fraction(1), 0),),
                self.base.point: ((Fraction(2), self.cover.point),)}
        for j in range(1, h + 1):
            i = j if j <= g else j - g + 1
            ca = self.cover.alpha(j)
            cb = self.cover.beta(j)
            push[ca] = (Fraction(2) if j == 1 else Fraction(1), self.base.alpha(i))
            push[cb] = (Fraction(1), self.base.beta(i))
        for i in range(1, g + 1):
            if i == 1:
                pull[self.base.alpha(1)] = ((Fraction(1), self.cover.alpha(1)),)
                pull[self.base.beta(1)] = ((Fraction(2), self.cover.beta(1)),)
            else:
                pull[self.base.alpha(i)] = ((Fraction(1), self.cover.alpha(i)),
                                            (Fraction(1), self.cover.alpha(g - 1 + i)))
                pull[self.base.beta(i)] = ((Fraction(1), self.cover.beta(i)),
                                           (Fraction(1), self.cover.beta(g - 1 + i)))
        self._push = push
        self._pull = pull

    def pushforward_element(self, u: dict) -> dict:
        """Slotwise transfer to the base.  Degree preserving, so no
        sign bookkeeping is needed."""
        out = {}
        for key, c in u.items():
            coeff = c
            image = []
            for code in key:
                f, target = self._push[code]
                coeff *= f
                image.append(target)
            k = tuple(image)
            s = out.get(k, Fraction(0)) + coeff
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def pullback_element(self, u: dict) -> dict:
        out = {}
        for key, c in u.items():
            expansions = [(c, [])]
            for code in key:
                terms = self._pull[code]
                expansions = [(f0 * f, codes + [target])
                              for f0, codes in expansions
                              for f, target in terms]
            for coeff, codes in expansions:
                k = tuple(codes)
                s = out.get(k, Fraction(0)) + coeff
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out
