"""Intersection tables for the 27 distinguished classes, re-derived
from coplanar-triple constraints, plus the lattice-level consequences.

Each of the 27 classes corresponds to a line of the cubic surface.
The only inputs are a prescribed self-intersection and a prescribed
total for the pairing of any class against the three members of any
coplanar triple; everything else is forced: the 45 triples give 1215
linear equations in the 351 unordered pairings, and the system has
full rank, so the familiar two-value tables (meet / skew) drop out as
the unique solutions rather than being assumed.

Downstream of the tables the module checks the lattice facts: the
difference classes against a skew sextet carry a Gram matrix of
determinant 192 isometric to a rescaled E6, pairing differences agree
with -2 times the corresponding line differences for every index
quadruple, the classes span a 7-dimensional space, and the projections
of the lines away from the canonical class are norm-minimizing vectors
of the dual E6 lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .cubic27 import (CANONICAL_CLASS, Line, PicVector, enumerate_lines,
                      incidence, tritangent_triples, weyl_group)
from .exactlinalg import (IncrementalRref, LinearSystemError, mat_det,
                          mat_inverse, mat_rank, minimum_norm, short_vectors,
                          solve_unique)

NUM_LINES = 27
NUM_PAIRS = NUM_LINES * (NUM_LINES - 1) // 2  # 351


@dataclass(frozen=True)
class PairingTable:
    """Symmetric table of pairings between the 27 classes, indexed by
    the underlying lines; the diagonal is the prescribed
    self-intersection."""

    lines: Tuple[Line, ...]
    values: Tuple[Tuple[Fraction, ...], ...]
    self_value: Fraction
    triple_total: Fraction

    def index(self, line) -> int:
        label = line.label if isinstance(line, Line) else str(line)
        for k, l in enumerate(self.lines):
            if l.label == label:
                return k
        raise KeyError("unknown line %r" % label)

    def value(self, l1, l2) -> Fraction:
        return self.values[self.index(l1)][self.index(l2)]


@dataclass(frozen=True)
class GramMatrix:
    """Integer Gram matrix with the generating classes recorded."""

    entries: Tuple[Tuple[int, ...], ...]
    generators: Tuple[str, ...]
    note: str = ""

    def determinant(self) -> Fraction:
        return mat_det(self.entries)


def _pair_index() -> Dict[Tuple[int, int], int]:
    index = {}
    for i, j in combinations(range(NUM_LINES), 2):
        index[(i, j)] = len(index)
    return index


def solve_pairings(self_value, triple_total) -> PairingTable:
    """Unique symmetric pairing table satisfying all triple constraints.

    For every class X and every coplanar triple T, the sum of the
    pairings of X against the members of T must equal ``triple_total``,
    with the pairing of X against itself prescribed as ``self_value``.
    The resulting linear system in the 351 unordered pairings is solved
    by exact elimination and must have full rank.

    >>> t = solve_pairings(16, 40)
    >>> t.value("E1", "F12"), t.value("E1", "E2")
    (Fraction(12, 1), Fraction(14, 1))
    """
    self_value = Fraction(self_value)
    triple_total = Fraction(triple_total)
    lines = tuple(enumerate_lines())
    triples = tritangent_triples()
    position = {l.label: k for k, l in enumerate(lines)}
    pair_index = _pair_index()

    def pair(i: int, j: int) -> int:
        return pair_index[(i, j) if i < j else (j, i)]

    rref = IncrementalRref()
    try:
        for x in range(NUM_LINES):
            for t in triples:
                members = [position[l.label] for l in t]
                cols = [pair(x, y) for y in members if y != x]
                rhs = triple_total - (self_value if x in members else 0)
                rref.add_row({c: 1 for c in cols}, rhs)
    except LinearSystemError as exc:
        raise LinearSystemError(
            "pairing system inconsistent (rank %d of %d): %s"
            % (rref.rank, NUM_PAIRS, exc))
    if rref.rank < NUM_PAIRS:
        raise LinearSystemError(
            "pairing system underdetermined: rank %d of %d"
            % (rref.rank, NUM_PAIRS))
    solution = rref.solution(NUM_PAIRS)
    values = [[self_value] * NUM_LINES for _ in range(NUM_LINES)]
    for (i, j), k in pair_index.items():
        values[i][j] = values[j][i] = solution[k]
    return PairingTable(lines, tuple(tuple(row) for row in values),
                        self_value, triple_total)


def verify_affine_form(table: PairingTable) -> Tuple[Fraction, Fraction]:
    """Exact fit p(X, Y) = a + b * (L_X . L_Y) over all pairs,
    the diagonal included (self-intersection against L.L = -1).

    >>> verify_affine_form(solve_pairings(16, 40))
    (Fraction(14, 1), Fraction(-2, 1))
    """
    rows, rhs = [], []
    n = len(table.lines)
    for i in range(n):
        for j in range(i, n):
            rows.append([1, table.lines[i].vector.dot(table.lines[j].vector)])
            rhs.append(table.values[i][j])
    try:
        a, b = solve_unique(rows, rhs)
    except LinearSystemError as exc:
        raise LinearSystemError("no exact affine fit in the line pairing: %s" % exc)
    return a, b


def row_sum_check(table: PairingTable) -> bool:
    """Whether the pairing of every class against every coplanar triple
    (member or not) sums to the prescribed total, exhaustively."""
    for x in range(len(table.lines)):
        for t in tritangent_triples():
            total = sum(table.values[x][table.index(l)] for l in t)
            if total != table.triple_total:
                return False
    return True


def _validate_config(config: Sequence[Line]) -> Tuple[List[Line], Line]:
    if len(config) != 7:
        raise ValueError(
            "configuration must consist of six mutually skew lines and one "
            "seventh line, got %d entries" % len(config))
    xs, y = list(config[:6]), config[6]
    if len({l.label for l in xs}) != 6:
        raise ValueError("configuration invalid: repeated line among the X_i")
    for l1, l2 in combinations(xs, 2):
        if incidence(l1, l2) != 0:
            raise ValueError("configuration invalid: %s and %s are not skew"
                             % (l1.label, l2.label))
    if any(y.label == l.label for l in xs):
        raise ValueError("configuration invalid: Y coincides with %s" % y.label)
    meets = sum(incidence(x, y) for x in xs)
    if meets != 2:
        raise ValueError(
            "configuration invalid: Y meets %d of the X_i, expected exactly 2"
            % meets)
    return xs, y


def standard_config() -> Tuple[Line, ...]:
    """The default valid configuration: the six exceptional classes and
    the line through the first two points."""
    by_label = {l.label: l for l in enumerate_lines()}
    return tuple(by_label[f"E{i}"] for i in range(1, 7)) + (by_label["F12"],)


def gram_delta(table: PairingTable, config: Sequence[Line]) -> GramMatrix:
    """Gram matrix of the difference classes delta_i = X_i - Y.

    >>> gram_delta(solve_pairings(0, 8), standard_config()).determinant()
    Fraction(192, 1)
    """
    xs, y = _validate_config(config)
    p = table.value
    entries = []
    for i in range(6):
        row = []
        for j in range(6):
            value = (p(xs[i], xs[j]) if i != j else table.self_value)
            value = value - p(xs[i], y) - p(xs[j], y) + table.self_value
            if value.denominator != 1:
                raise ValueError("Gram entries are not integers")
            row.append(int(value))
        entries.append(tuple(row))
    diag = [entries[i][i] for i in range(6)]
    if all(v > 0 for v in diag):
        note = ("positive definite; the (-2)-scaled description of the same "
                "lattice differs by an overall sign")
    elif all(v < 0 for v in diag):
        note = ("negative definite; the (+2)-scaled description of the same "
                "lattice differs by an overall sign")
    else:
        note = "indefinite diagonal"
    return GramMatrix(tuple(entries),
                      tuple("%s-%s" % (x.label, y.label) for x in xs), note)


def _cartan_e6() -> List[List[int]]:
    """The standard E6 Cartan matrix (chain 1-3-4-5-6, node 2 on 4)."""
    c = [[0] * 6 for _ in range(6)]
    for i in range(6):
        c[i][i] = 2
    for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
        c[i][j] = c[j][i] = -1
    return c


def _scaled_cartan_isometry(gram, scale: int) -> bool:
    """Whether a positive definite integer Gram matrix is integrally
    isometric to scale * (E6 Cartan matrix), scale > 0.

    Matching determinants make any Cartan-patterned tuple of lattice
    vectors automatically a basis, so the search only has to find six
    short vectors realizing the Cartan pattern.
    """
    target = [[scale * v for v in row] for row in _cartan_e6()]
    if mat_det(gram) != mat_det(target):
        return False
    norm = 2 * scale
    try:
        candidates = [v for v, n in short_vectors(gram, norm) if n == norm]
    except LinearSystemError:
        return False
    g = [[Fraction(x) for x in row] for row in gram]

    def dot(x, y):
        return sum(x[i] * g[i][j] * y[j]
                   for i in range(6) for j in range(6) if g[i][j])

    m = len(candidates)
    dots = [[dot(candidates[a], candidates[b]) for b in range(m)]
            for a in range(m)]
    chosen: List[int] = []

    def place(k: int) -> bool:
        if k == 6:
            return True
        for a in range(m):
            if all(dots[a][b] == target[k][pos]
                   for pos, b in enumerate(chosen)):
                chosen.append(a)
                if place(k + 1):
                    return True
                chosen.pop()
        return False

    if not place(0):
        return False
    basis = [list(candidates[a]) for a in chosen]
    if abs(mat_det(basis)) != 1:
        raise AssertionError("matched basis is not unimodular despite "
                             "matching determinants")
    return True


def check_E6_isometry(gram, scale: int) -> bool:
    """Whether the 6x6 Gram matrix is integrally isometric to the E6
    root lattice with its form multiplied by ``scale``.

    >>> check_E6_isometry(gram_delta(solve_pairings(0, 8), standard_config()), -2)
    True
    """
    rows = gram.entries if isinstance(gram, GramMatrix) else gram
    if scale == 0:
        return False
    if scale < 0:
        rows = [[-v for v in row] for row in rows]
        scale = -scale
    return _scaled_cartan_isometry(rows, scale)


def check_primal_minus_two_isometry(table: PairingTable) -> bool:
    """Pairing differences against -2 times line differences, swept
    over all index quadruples (i, j, k, l):

        p(i,k) - p(i,l) - p(j,k) + p(j,l)
            = -2 [ (L_i - L_j) . (L_k - L_l) ]

    Equivalently, all second differences of p + 2 (L . L) vanish.
    """
    n = len(table.lines)
    den = lcm(*[v.denominator for row in table.values for v in row])
    p = np.array([[int(v * den) for v in row] for row in table.values],
                 dtype=np.int64)
    d = np.array([[table.lines[i].vector.dot(table.lines[j].vector)
                   for j in range(n)] for i in range(n)], dtype=np.int64)
    a = p + 2 * den * d
    quad = (a[:, None, :, None] - a[:, None, None, :]
            - a[None, :, :, None] + a[None, :, None, :])
    return bool((quad == 0).all())


# ----------------------------------------------------------------------
# the rational model: lines projected away from the canonical class

def _lambda_vector(line: Line) -> Tuple[Fraction, ...]:
    """Projection of the line to the orthogonal complement of K over
    the rationals: L + K/3."""
    return tuple(Fraction(c) + Fraction(k, 3)
                 for c, k in zip(line.vector.coords, CANONICAL_CLASS.coords))


def _form_dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    signs = (1, -1, -1, -1, -1, -1, -1)
    return sum(s * x * y for s, x, y in zip(signs, u, v))


def _lambda_model(table: PairingTable):
    """Coefficients (c0, c1) with p(X, Y) = c0 + c1 * (lambda_X . lambda_Y)
    for all pairs, verified exactly, plus the lambda vectors."""
    a, b = verify_affine_form(table)
    c0, c1 = a + b / 3, b
    lams = [_lambda_vector(l) for l in table.lines]
    n = len(table.lines)
    for i in range(n):
        for j in range(i, n):
            expected = c0 + c1 * _form_dot(lams[i], lams[j])
            if table.values[i][j] != expected:
                raise LinearSystemError(
                    "affine model fails to reproduce the table at (%s, %s)"
                    % (table.lines[i].label, table.lines[j].label))
    return c0, c1, lams


def span_rank(table: PairingTable,
              subset: Optional[Sequence[Line]] = None) -> int:
    """Dimension of the span of the model vectors (1, lambda_X), after
    verifying that the model reproduces the table exactly.

    >>> span_rank(solve_pairings(16, 40))
    7
    """
    _, _, lams = _lambda_model(table)
    if subset is None:
        chosen = list(range(len(table.lines)))
    else:
        chosen = [table.index(l) for l in subset]
    vectors = [[Fraction(1), *lams[i]] for i in chosen]
    return mat_rank(vectors)


def difference_span_rank(table: PairingTable,
                         config: Optional[Sequence[Line]] = None) -> int:
    """Dimension of the span of the difference classes X_i - Y for a
    valid configuration (six mutually skew lines and a seventh meeting
    exactly two of them).

    >>> difference_span_rank(solve_pairings(16, 40))
    6
    """
    _, _, lams = _lambda_model(table)
    xs, y = _validate_config(config if config is not None else standard_config())
    base = lams[table.index(y)]
    vectors = [[a - b for a, b in zip(lams[table.index(x)], base)] for x in xs]
    return mat_rank(vectors)


# ----------------------------------------------------------------------
# dual-lattice norms

def _kperp_basis() -> List[PicVector]:
    """Integral basis of the orthogonal complement of K: the five
    differences of consecutive exceptional vectors and one root with
    hyperplane part 1."""
    basis = []
    for i in range(5):
        coords = [0] * 7
        coords[1 + i] = -1
        coords[2 + i] = 1
        basis.append(PicVector(tuple(coords)))
    basis.append(PicVector((1, 1, 1, 1, 0, 0, 0)))
    return basis


def dual_norm_report(table: PairingTable) -> dict:
    """All the facts behind the dual-norm check, as a dict."""
    c0, c1, lams = _lambda_model(table)
    n = len(table.lines)
    lam_norms = {_form_dot(lams[i], lams[i]) for i in range(n)}
    uniform = lam_norms == {Fraction(-4, 3)}
    pair_rule = all(
        _form_dot(lams[i], lams[j])
        == table.lines[i].vector.dot(table.lines[j].vector) - Fraction(1, 3)
        for i in range(n) for j in range(i + 1, n))

    basis = _kperp_basis()
    gram = [[u.dot(v) for v in basis] for u in basis]
    positive = [[-v for v in row] for row in gram]
    kperp_det = mat_det(positive)
    kperp_is_e6 = kperp_det == 3 and _scaled_cartan_isometry(positive, 1)

    dual_gram = mat_inverse(positive)
    dual_min = minimum_norm(dual_gram)
    minimal = [v for v, norm in short_vectors(dual_gram, dual_min)
               if norm == dual_min]

    # each lambda, written in the dual basis by its integer pairings
    # against the lattice basis, must be a minimal vector of the dual
    lambda_minimal = True
    for i in range(n):
        pairings = [_form_dot(lams[i], b.coords) for b in basis]
        if any(p.denominator != 1 for p in pairings):
            lambda_minimal = False
            break
        y = [-p for p in pairings]  # dual coordinates for the positive form
        norm = sum(y[r] * dual_gram[r][s] * y[s]
                   for r in range(6) for s in range(6))
        if norm != dual_min:
            lambda_minimal = False
            break

    return {
        "c0": c0,
        "c1": c1,
        "lambda_norm": Fraction(-4, 3),
        "lambda_norm_uniform": uniform,
        "pair_rule_holds": pair_rule,
        "kperp_determinant": kperp_det,
        "kperp_is_e6": kperp_is_e6,
        "dual_minimum": dual_min,
        "dual_minimum_count": len(minimal),
        "lambda_is_minimal_dual_vector": lambda_minimal,
        "gamma_norm": c1 * Fraction(-4, 3),
        "diagonal_consistent":
            c0 + c1 * Fraction(-4, 3) == table.self_value,
    }


def dual_norm_check(table: PairingTable) -> bool:
    """Whether the projected line classes are norm-minimizing vectors
    of the dual E6 lattice, with uniform norm -4/3 and the bilinear
    pairing rule L.L' - 1/3, and the table diagonal consistent with
    the affine model.

    >>> dual_norm_check(solve_pairings(0, 8))
    True
    """
    report = dual_norm_report(table)
    return bool(
        report["lambda_norm_uniform"]
        and report["pair_rule_holds"]
        and report["kperp_is_e6"]
        and report["dual_minimum"] == Fraction(4, 3)
        and report["dual_minimum_count"] == 54
        and report["lambda_is_minimal_dual_vector"]
        and report["diagonal_consistent"])


def weyl_invariance_check(table: PairingTable, group=None) -> bool:
    """Whether the table is invariant under the line permutations
    induced by the generators of the reflection group."""
    group = group if group is not None else weyl_group()
    by_vector = {l.vector: table.index(l) for l in table.lines}
    n = len(table.lines)
    for gen in group.generators:
        image = [by_vector[gen.apply(l.vector)] for l in table.lines]
        for i in range(n):
            for j in range(i, n):
                if table.values[image[i]][image[j]] != table.values[i][j]:
                    return False
    return True
