"""Exact linear algebra over the rationals.

Dense elimination for small systems, an incremental sparse row reduction
for constraint systems whose rows touch only a few unknowns, and short
vector enumeration in positive definite quadratic forms.  Everything
runs on fractions.Fraction; no floating point enters at any stage.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rational = Fraction


class LinearSystemError(ValueError):
    """Raised when a system is inconsistent or not uniquely solvable."""


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def mat_rank(rows) -> int:
    """Rank of a dense rational matrix.

    >>> mat_rank([[1, 2], [2, 4], [0, 1]])
    2
    """
    m = _as_fraction_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def mat_det(rows) -> Fraction:
    """Determinant of a square rational matrix by fraction elimination.

    >>> mat_det([[2, 1], [1, 2]])
    Fraction(3, 1)
    """
    m = _as_fraction_rows(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def mat_inverse(rows) -> list:
    """Inverse of a square rational matrix by Gauss-Jordan elimination.

    >>> mat_inverse([[2, 1], [1, 1]])
    [[Fraction(1, 1), Fraction(-1, 1)], [Fraction(-1, 1), Fraction(2, 1)]]
    """
    m = _as_fraction_rows(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse requires a square matrix")
    aug = [row + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise LinearSystemError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * c for a, c in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_unique(rows, rhs) -> list:
    """Solve rows * x = rhs, requiring exactly one solution.

    Accepts overdetermined systems; raises LinearSystemError when the
    system is inconsistent or the solution is not unique.
    """
    m = _as_fraction_rows(rows)
    b = [Fraction(x) for x in rhs]
    if len(m) != len(b):
        raise ValueError("row/rhs length mismatch")
    if not m:
        raise LinearSystemError("empty system")
    ncols = len(m[0])
    aug = [row + [bb] for row, bb in zip(m, b)]
    rank = 0
    pivot_cols = []
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(aug)) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(len(aug)):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * c for a, c in zip(aug[r], aug[rank])]
        pivot_cols.append(col)
        rank += 1
    for r in range(rank, len(aug)):
        if aug[r][ncols] != 0:
            raise LinearSystemError("inconsistent system")
    if rank < ncols:
        raise LinearSystemError(
            "underdetermined system: rank %d of %d" % (rank, ncols))
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivot_cols):
        x[col] = aug[r][ncols]
    return x


class IncrementalRref:
    """Reduced row echelon form built one sparse row at a time.

    Rows are dicts mapping column index to a nonzero Fraction, paired
    with a rational right hand side.  The reduction keeps every stored
    pivot row reduced against all the others, so rank and solution
    extraction are immediate.  Intended for constraint systems where
    each row touches a handful of unknowns; fill-in stays local when
    rows arrive grouped by shared support.
    """

    def __init__(self):
        # pivot column -> (rowdict, rhs); rowdict[pivot] == 1
        self._pivots = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add_row(self, coeffs, rhs):
        """Reduce one row into the structure.

        Returns the new pivot column, or None when the row was a linear
        combination of earlier ones.  Raises LinearSystemError when the
        row contradicts them.
        """
        row = {c: Fraction(v) for c, v in coeffs.items() if v != 0}
        rhs = Fraction(rhs)
        for col in sorted(row):
            if col in self._pivots and col in row:
                prow, prhs = self._pivots[col]
                factor = row.pop(col)
                for c, v in prow.items():
                    if c == col:
                        continue
                    new = row.get(c, Fraction(0)) - factor * v
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
                rhs -= factor * prhs
        if not row:
            if rhs != 0:
                raise LinearSystemError("inconsistent constraint")
            return None
        pivot = min(row)
        inv = 1 / row[pivot]
        row = {c: v * inv for c, v in row.items()}
        rhs *= inv
        # eliminate the new pivot column from every stored row
        for col, (prow, prhs) in list(self._pivots.items()):
            factor = prow.get(pivot)
            if factor is None:
                continue
            for c, v in row.items():
                if c == pivot:
                    continue
                new = prow.get(c, Fraction(0)) - factor * v
                if new:
                    prow[c] = new
                else:
                    prow.pop(c, None)
            prow.pop(pivot)
            self._pivots[col] = (prow, prhs - factor * rhs)
        self._pivots[pivot] = (row, rhs)
        return pivot

    def solution(self, num_unknowns: int) -> list:
        """Full solution vector; requires rank == num_unknowns."""
        if self.rank < num_unknowns:
            raise LinearSystemError(
                "underdetermined system: rank %d of %d"
                % (self.rank, num_unknowns))
        x = [Fraction(0)] * num_unknowns
        for col, (row, rhs) in self._pivots.items():
            extra = [c for c in row if c != col]
            if extra:
                raise LinearSystemError("free columns remain: %r" % extra)
            x[col] = rhs
        return x


def ldl_decomposition(gram):
    """G = L D L^T for symmetric positive definite rational G.

    Returns (L, D) with L unit lower triangular and D the list of
    positive pivots.  Raises LinearSystemError if G is not positive
    definite.
    """
    g = _as_fraction_rows(gram)
    n = len(g)
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        d = g[j][j] - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        if d <= 0:
            raise LinearSystemError("matrix is not positive definite")
        diag[j] = d
        lower[j][j] = Fraction(1)
        for i in range(j + 1, n):
            s = g[i][j] - sum(lower[i][k] * lower[j][k] * diag[k]
                              for k in range(j))
            lower[i][j] = s / d
    return lower, diag


def _floor_sqrt(value: Fraction) -> int:
    if value < 0:
        return -1
    return isqrt(value.numerator * value.denominator) // value.denominator


def short_vectors(gram, bound):
    """All nonzero integer vectors x with x^T G x <= bound.

    G must be symmetric positive definite over the rationals.  Returns
    a list of (coords, norm) pairs, both signs included, in a
    deterministic order.  Uses the bound propagation of the classical
    Fincke and Pohst enumeration.
    """
    lower, diag = ldl_decomposition(gram)
    n = len(diag)
    bound = Fraction(bound)
    coords = [0] * n
    out = []

    def descend(level, used):
        if level < 0:
            if any(coords):
                out.append((tuple(coords), used))
            return
        center = sum(lower[j][level] * coords[j] for j in range(level + 1, n))
        budget = (bound - used) / diag[level]
        radius = _floor_sqrt(budget) + 1
        base = -center
        lo = (base.numerator // base.denominator) - radius
        hi = lo + 2 * radius + 1
        for t in range(lo, hi + 1):
            contribution = diag[level] * (t + center) ** 2
            if contribution + used <= bound:
                coords[level] = t
                descend(level - 1, used + contribution)
        coords[level] = 0

    descend(n - 1, Fraction(0))
    return out


def minimum_norm(gram):
    """Smallest value of x^T G x over nonzero integer x, found by
    growing the search bound until vectors appear."""
    bound = Fraction(1)
    while True:
        found = short_vectors(gram, bound)
        if found:
            return min(norm for _, norm in found)
        bound *= 2
