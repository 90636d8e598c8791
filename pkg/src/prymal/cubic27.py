"""The twenty-seven lines of a smooth cubic surface as lattice vectors.

Everything lives in the rank-seven lattice with bilinear form
diag(+1, -1, -1, -1, -1, -1, -1): the blowup model of the plane in six
points.  Lines are the integer vectors v with v.v = -1 and v.K = -1,
found by a bounded exhaustive search that must come back with exactly
27 of them.  On top of the lines the module builds the incidence
relation, the 45 coplanar triples, the 72 sixers, the 72 roots
orthogonal to K, and the reflection group of the configuration (order
51840), generated by the index transpositions and one quadratic
transformation and closed off by breadth-first multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, List, Tuple

import numpy as np

RANK = 7
_FORM_SIGNS = (1, -1, -1, -1, -1, -1, -1)
WEYL_CLOSURE_CAP = 60000


@dataclass(frozen=True, order=True)
class PicVector:
    """Integer vector (a; b1..b6) in the blowup lattice."""

    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != RANK:
            raise ValueError("a lattice vector has seven coordinates")
        if not all(isinstance(c, (int, np.integer)) for c in self.coords):
            raise ValueError("coordinates must be integers")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def hyperplane_part(self) -> int:
        return self.coords[0]

    @property
    def exceptional_part(self) -> Tuple[int, ...]:
        return self.coords[1:]

    def dot(self, other: "PicVector") -> int:
        """Intersection pairing a_u a_v - sum_i b_{u,i} b_{v,i}.

        >>> CANONICAL_CLASS.dot(CANONICAL_CLASS)
        3
        """
        return sum(s * x * y
                   for s, x, y in zip(_FORM_SIGNS, self.coords, other.coords))

    def __add__(self, other: "PicVector") -> "PicVector":
        return PicVector(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "PicVector") -> "PicVector":
        return PicVector(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "PicVector":
        return PicVector(tuple(-x for x in self.coords))


CANONICAL_CLASS = PicVector((-3, -1, -1, -1, -1, -1, -1))


@dataclass(frozen=True, order=True)
class Line:
    """A line of the surface: a vector of self-intersection -1 meeting
    the canonical class in -1, together with its classical label."""

    label: str
    vector: PicVector


def _expected_lines() -> List[Line]:
    lines = []
    for i in range(1, 7):
        b = [0] * 6
        b[i - 1] = -1
        lines.append(Line(f"E{i}", PicVector((0, *b))))
    for i, j in combinations(range(1, 7), 2):
        b = [0] * 6
        b[i - 1] = b[j - 1] = 1
        lines.append(Line(f"F{i}{j}", PicVector((1, *b))))
    for j in range(1, 7):
        b = [1] * 6
        b[j - 1] = 0
        lines.append(Line(f"G{j}", PicVector((2, *b))))
    return lines


def enumerate_lines() -> List[Line]:
    """All lines, by bounded search over v.v = -1, v.K = -1.

    The bounds |a| <= 2, |b_i| <= 1 are complete: v.K = -1 forces
    sum(b) = 3a - 1, and Cauchy-Schwarz against v.v = -1 pins a to
    {0, 1, 2}, after which the norm leaves no room for any |b_i| >= 2.

    >>> len(enumerate_lines())
    27
    """
    found = set()
    for a in range(-2, 3):
        for b in product((-1, 0, 1), repeat=6):
            v = PicVector((a, *b))
            if v.dot(v) == -1 and v.dot(CANONICAL_CLASS) == -1:
                found.add(v)
    labeled = _expected_lines()
    if len(found) != 27 or found != {l.vector for l in labeled}:
        raise RuntimeError(
            "line search returned %d vectors instead of the 27 classical ones"
            % len(found))
    return labeled


def incidence(l1: Line, l2: Line) -> int:
    """Intersection number of two distinct lines: 1 if they meet, 0 if skew.

    >>> lines = {l.label: l for l in enumerate_lines()}
    >>> incidence(lines["E1"], lines["F12"])
    1
    >>> incidence(lines["E1"], lines["E2"])
    0
    """
    if l1.vector == l2.vector:
        raise ValueError("self-incidence undefined; self-intersection is -1")
    value = l1.vector.dot(l2.vector)
    if value not in (0, 1):
        raise ValueError("pairing of distinct lines must be 0 or 1, got %d" % value)
    return value


def tritangent_triples() -> List[Tuple[Line, Line, Line]]:
    """All unordered triples of mutually meeting lines (45 of them);
    each triple is cut out by one plane, so it sums to -K."""
    lines = enumerate_lines()
    triples = []
    for t in combinations(lines, 3):
        if all(incidence(x, y) == 1 for x, y in combinations(t, 2)):
            triples.append(t)
    return triples


def sixers() -> List[frozenset]:
    """All 6-element sets of mutually skew lines (72 of them)."""
    lines = enumerate_lines()
    skew = {l: {m for m in lines if m != l and incidence(l, m) == 0}
            for l in lines}
    out = []

    def extend(chosen, candidates):
        if len(chosen) == 6:
            out.append(frozenset(chosen))
            return
        # not enough candidates left to complete a sixer
        if len(chosen) + len(candidates) < 6:
            return
        for idx, l in enumerate(candidates):
            extend(chosen + [l], [m for m in candidates[idx + 1:] if m in skew[l]])

    extend([], lines)
    return sorted(out, key=lambda s: sorted(l.label for l in s))


def roots() -> List[PicVector]:
    """The 72 vectors of square -2 orthogonal to K: the root system of
    the configuration.  Bounded search, complete by the same
    Cauchy-Schwarz argument as for the lines."""
    found = []
    for a in range(-2, 3):
        for b in product((-1, 0, 1), repeat=6):
            v = PicVector((a, *b))
            if v.dot(v) == -2 and v.dot(CANONICAL_CLASS) == 0:
                found.append(v)
    return sorted(found)


# ----------------------------------------------------------------------
# the reflection group of the configuration

@dataclass(frozen=True)
class WeylElement:
    """A 7x7 integer matrix preserving the form and fixing K."""

    matrix: Tuple[Tuple[int, ...], ...]

    def apply(self, v: PicVector) -> PicVector:
        return PicVector(tuple(
            sum(row[k] * v.coords[k] for k in range(RANK))
            for row in self.matrix))

    def compose(self, other: "WeylElement") -> "WeylElement":
        a = np.array(self.matrix, dtype=np.int64)
        b = np.array(other.matrix, dtype=np.int64)
        return WeylElement(tuple(map(tuple, (a @ b).tolist())))


def _transposition_matrix(i: int, j: int) -> np.ndarray:
    m = np.eye(RANK, dtype=np.int64)
    m[[i, j]] = m[[j, i]]
    return m


def _quadratic_reflection_matrix() -> np.ndarray:
    """Reflection in the root (1; 1, 1, 1, 0, 0, 0): the standard
    quadratic transformation based at the first three points."""
    r = np.array([1, 1, 1, 1, 0, 0, 0], dtype=np.int64)
    signs = np.array(_FORM_SIGNS, dtype=np.int64)
    # s_r(v) = v + <v, r> r because <r, r> = -2
    return np.eye(RANK, dtype=np.int64) + np.outer(r, signs * r)


class WeylGroup:
    """The group generated by the 15 index transpositions and the
    quadratic reflection, with closure computed on demand."""

    def __init__(self, cap: int = WEYL_CLOSURE_CAP):
        self._cap = cap
        gens = [_transposition_matrix(i, j)
                for i, j in combinations(range(1, 7), 2)]
        gens.append(_quadratic_reflection_matrix())
        signs = np.diag(np.array(_FORM_SIGNS, dtype=np.int64))
        k = np.array(CANONICAL_CLASS.coords, dtype=np.int64)
        for g in gens:
            if not np.array_equal(g.T @ signs @ g, signs):
                raise AssertionError("generator does not preserve the form")
            if not np.array_equal(g @ k, k):
                raise AssertionError("generator does not fix K")
        self._generators = gens
        self._matrices = None

    @property
    def generators(self) -> List[WeylElement]:
        return [WeylElement(tuple(map(tuple, g.tolist()))) for g in self._generators]

    def _close(self) -> None:
        if self._matrices is not None:
            return
        identity = np.eye(RANK, dtype=np.int64)
        seen = {identity.tobytes()}
        matrices = [identity]
        frontier = [identity]
        while frontier:
            stack = np.stack(frontier)
            frontier = []
            for g in self._generators:
                for prod in stack @ g:
                    key = prod.tobytes()
                    if key not in seen:
                        seen.add(key)
                        matrices.append(prod)
                        frontier.append(prod)
                        if len(matrices) > self._cap:
                            raise RuntimeError(
                                "group closure exceeded %d elements, which "
                                "indicates wrong generators" % self._cap)
        self._matrices = matrices

    def order(self) -> int:
        """
        >>> WeylGroup().order()
        51840
        """
        self._close()
        return len(self._matrices)

    def elements(self) -> List[WeylElement]:
        self._close()
        return [WeylElement(tuple(map(tuple, m.tolist()))) for m in self._matrices]

    def element_matrices(self) -> np.ndarray:
        self._close()
        return np.stack(self._matrices)

    # ------------------------------------------------------------------

    @staticmethod
    def _as_orbit_point(x):
        if isinstance(x, Line):
            return x.vector
        if isinstance(x, PicVector):
            return x
        if isinstance(x, (set, frozenset, tuple, list)):
            return frozenset(WeylGroup._as_orbit_point(y) for y in x)
        raise TypeError("cannot act on %r" % (x,))

    def _act(self, g: np.ndarray, point):
        if isinstance(point, PicVector):
            return PicVector(tuple((g @ np.array(point.coords, dtype=np.int64)).tolist()))
        return frozenset(self._act(g, y) for y in point)

    def orbit(self, x) -> set:
        """Orbit of a vector, a line, or a set of either, under the
        generated group (computed by breadth-first search on the
        generators, so it never needs the full closure)."""
        start = self._as_orbit_point(x)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for point in frontier:
                for g in self._generators:
                    image = self._act(g, point)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return seen

    def is_transitive(self, xs: Iterable) -> bool:
        """Whether the group permutes the given collection transitively."""
        points = {self._as_orbit_point(x) for x in xs}
        if not points:
            return False
        return self.orbit(next(iter(points))) == points


def weyl_group() -> WeylGroup:
    return WeylGroup()
