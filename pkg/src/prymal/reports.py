"""Named-check reports with deterministic serialization.

A :class:`Report` is a list of :class:`Check` results plus the
invocation metadata.  Serialization is fully deterministic — sorted
JSON keys, canonical rational rendering ``a/b`` (integers bare), no
timestamps — so repeated runs are byte-identical.

Provenance tags:

- ``golden``: the computed value is compared against a pinned constant.
- ``oracle``: two independent computational routes are compared.
- ``identity``: an internal mathematical identity or property holds.
- ``derived``: emitted output of a validated pipeline (used by the
  table payloads; every golden constant it reproduces is asserted in
  the ``verify`` suites).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import cover_pushforward as cp
from . import cubic27
from . import grr_hilbert as gh
from . import hodge_primal as hp
from . import intersection_solver as isv
from .polynomials import Poly, format_poly, format_rational
from .sympower_ring import SymClass


# ----------------------------------------------------------------------
# rendering

def format_sym(x: SymClass) -> str:
    """Canonical rendering of a symmetric-power class: terms in
    increasing theta-degree within increasing total degree,
    ``eta^a*theta^b`` monomials with bare rational coefficients."""
    items = sorted(x.coefficients.items(), key=lambda kv: (sum(kv[0]), kv[0][1]))
    if not items:
        return "0"
    parts = []
    for (a, b), c in items:
        factors = []
        if isinstance(c, Poly):
            factors.append("(%s)" % format_poly(c))
        elif c != 1 or (a, b) == (0, 0):
            factors.append(format_rational(c))
        if a:
            factors.append("eta" if a == 1 else "eta^%d" % a)
        if b:
            factors.append("theta" if b == 1 else "theta^%d" % b)
        parts.append("*".join(factors))
    return " + ".join(parts)


def render_value(value) -> str:
    """Render any check value to its canonical string."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, Poly):
        return format_poly(value)
    if isinstance(value, SymClass):
        return format_sym(value)
    if isinstance(value, hp.HodgeVector):
        return render_value(value.values)
    if isinstance(value, hp.RankPair):
        return render_value((value.k_plus, value.k_minus))
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(render_value(v) for v in value) + ")"
    if isinstance(value, str):
        return value
    raise TypeError("no canonical rendering for %r" % (value,))


@dataclass(frozen=True)
class Check:
    """One named check: pass/fail with expected and computed values."""

    suite: str
    name: str
    status: str
    expected: str
    computed: str
    provenance: str

    def as_dict(self) -> Dict[str, str]:
        return {
            "computed": self.computed,
            "expected": self.expected,
            "name": self.name,
            "provenance": self.provenance,
            "status": self.status,
            "suite": self.suite,
        }


def make_check(suite: str, name: str, expected, computed,
               provenance: str) -> Check:
    """Build a check by comparing ``expected`` and ``computed``; values
    compare by equality, then render canonically."""
    ok = expected == computed
    return Check(suite=suite, name=name,
                 status="pass" if ok else "fail",
                 expected=render_value(expected),
                 computed=render_value(computed),
                 provenance=provenance)


@dataclass(frozen=True)
class Report:
    """Invocation metadata plus an ordered list of checks."""

    command: str
    flags: Dict[str, str]
    checks: Tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def as_dict(self) -> dict:
        return {
            "checks": [c.as_dict() for c in self.checks],
            "command": self.command,
            "counts": {
                "fail": sum(1 for c in self.checks if c.status != "pass"),
                "pass": sum(1 for c in self.checks if c.status == "pass"),
            },
            "flags": dict(sorted(self.flags.items())),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_markdown(self) -> str:
        lines = ["# %s" % self.command, ""]
        if self.flags:
            lines.append("flags: " + ", ".join(
                "%s=%s" % kv for kv in sorted(self.flags.items())))
            lines.append("")
        lines.append("| suite | check | status | expected | computed | provenance |")
        lines.append("|---|---|---|---|---|---|")
        for c in self.checks:
            lines.append("| %s | %s | %s | %s | %s | %s |" % (
                c.suite, c.name, c.status, c.expected, c.computed,
                c.provenance))
        lines.append("")
        lines.append("result: %s (%d checks)" %
                     ("pass" if self.passed else "FAIL", len(self.checks)))
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# check suites

def _pairings_suite() -> List[Check]:
    s = "pairings"
    out: List[Check] = []
    surfaces = isv.solve_pairings(16, 40)
    curves = isv.solve_pairings(0, 8)
    e1, e2, f12 = (surfaces.lines[0], surfaces.lines[1],
                   surfaces.index("F12"))
    out.append(make_check(s, "surfaces-meeting-value", Fraction(12),
                          surfaces.value(e1, surfaces.lines[f12]), "golden"))
    out.append(make_check(s, "surfaces-skew-value", Fraction(14),
                          surfaces.value(e1, e2), "golden"))
    out.append(make_check(s, "curves-meeting-value", Fraction(4),
                          curves.value(e1, curves.lines[f12]), "golden"))
    out.append(make_check(s, "curves-skew-value", Fraction(2),
                          curves.value(e1, e2), "golden"))
    out.append(make_check(s, "surfaces-affine-fit",
                          (Fraction(14), Fraction(-2)),
                          isv.verify_affine_form(surfaces), "golden"))
    out.append(make_check(s, "curves-affine-fit",
                          (Fraction(2), Fraction(2)),
                          isv.verify_affine_form(curves), "golden"))
    out.append(make_check(s, "surfaces-row-sums", True,
                          isv.row_sum_check(surfaces), "identity"))
    out.append(make_check(s, "curves-row-sums", True,
                          isv.row_sum_check(curves), "identity"))
    config = isv.standard_config()
    gram_c = isv.gram_delta(curves, config)
    gram_s = isv.gram_delta(surfaces, config)
    out.append(make_check(s, "curves-delta-gram-determinant", 192,
                          gram_c.determinant(), "golden"))
    out.append(make_check(s, "curves-delta-gram-is-e6-minus-2", True,
                          isv.check_E6_isometry(gram_c, -2), "oracle"))
    out.append(make_check(s, "surfaces-delta-gram-is-e6-plus-2", True,
                          isv.check_E6_isometry(gram_s, 2), "oracle"))
    out.append(make_check(s, "surfaces-span-rank", 7,
                          isv.span_rank(surfaces), "golden"))
    out.append(make_check(s, "curves-span-rank", 7,
                          isv.span_rank(curves), "golden"))
    out.append(make_check(s, "surfaces-dual-norm-uniformity", True,
                          isv.dual_norm_check(surfaces), "identity"))
    out.append(make_check(s, "curves-dual-norm-uniformity", True,
                          isv.dual_norm_check(curves), "identity"))
    group = cubic27.weyl_group()
    out.append(make_check(s, "surfaces-weyl-invariance", True,
                          isv.weyl_invariance_check(surfaces, group),
                          "identity"))
    out.append(make_check(s, "curves-weyl-invariance", True,
                          isv.weyl_invariance_check(curves, group),
                          "identity"))
    return out


def _primal_suite() -> List[Check]:
    s = "primal"
    surfaces = isv.solve_pairings(16, 40)
    out = [make_check(s, "difference-pairing-sweep", True,
                      isv.check_primal_minus_two_isometry(surfaces),
                      "identity")]
    # one quadruple worked by hand: (E1-E2).(E1-E2) on both sides
    e1, e2 = surfaces.lines[0], surfaces.lines[1]
    lhs = (surfaces.value(e1, e1) - 2 * surfaces.value(e1, e2)
           + surfaces.value(e2, e2))
    v1, v2 = e1.vector, e2.vector
    rhs = -2 * (v1.dot(v1) - 2 * v1.dot(v2) + v2.dot(v2))
    out.append(make_check(s, "spot-quadruple", lhs, rhs, "identity"))
    out.append(make_check(s, "spot-quadruple-value", Fraction(4), lhs,
                          "golden"))
    return out


def _lines_suite() -> List[Check]:
    s = "lines"
    out: List[Check] = []
    lines = cubic27.enumerate_lines()
    out.append(make_check(s, "line-count", 27, len(lines), "golden"))
    triples = cubic27.tritangent_triples()
    out.append(make_check(s, "tritangent-triple-count", 45, len(triples),
                          "golden"))
    minus_k = -cubic27.CANONICAL_CLASS
    out.append(make_check(
        s, "triples-sum-to-anticanonical", True,
        all(t[0].vector + t[1].vector + t[2].vector == minus_k
            for t in triples), "identity"))
    sixers = cubic27.sixers()
    out.append(make_check(s, "sixer-count", 72, len(sixers), "golden"))
    out.append(make_check(s, "root-count", 72, len(cubic27.roots()),
                          "golden"))
    group = cubic27.weyl_group()
    out.append(make_check(s, "weyl-order", 51840, group.order(), "golden"))
    out.append(make_check(s, "weyl-transitive-on-lines", True,
                          group.is_transitive(lines), "identity"))
    out.append(make_check(s, "weyl-transitive-on-sixers", True,
                          group.is_transitive(sixers), "identity"))
    return out


_GOLDEN_PUSHFORWARD = (
    ("push-1-0", 1, 0, {(1, 0): 32}),
    ("push-0-1", 0, 1, {(1, 0): 160, (0, 1): 32}),
    ("push-2-0", 2, 0, {(2, 0): 16}),
    ("push-1-1", 1, 1, {(2, 0): 80, (1, 1): 16}),
    ("push-0-2", 0, 2, {(2, 0): 320, (1, 1): 160, (0, 2): 16}),
)


def _pushforward_suite() -> List[Check]:
    s = "pushforward"
    out: List[Check] = []
    for name, p, q, coeffs in _GOLDEN_PUSHFORWARD:
        expected = SymClass(6, 6, {k: Fraction(v) for k, v in coeffs.items()})
        out.append(make_check(s, name, expected,
                              cp.pushforward_closed(6, 6, p, q), "golden"))
    for g, d in ((2, 2), (2, 3), (3, 2), (3, 3)):
        ok = all(
            cp.classes_equal(cp.pushforward_closed(g, d, p, q),
                             cp.pushforward_oracle(g, d, p, q))
            for p in range(d + 1) for q in range(d + 1 - p))
        out.append(make_check(s, "closed-equals-oracle-g%d-d%d" % (g, d),
                              True, ok, "oracle"))
    out.append(make_check(s, "projection-formula-g2-d2", True,
                          cp.projection_formula_check(2, 2), "identity"))
    out.append(make_check(s, "projection-formula-g3-d3", True,
                          cp.projection_formula_check(3, 3), "identity"))
    out.append(make_check(s, "projection-formula-g6-d6", True,
                          cp.projection_formula_check(6, 6), "identity"))
    return out


def _hilbert_suite() -> List[Check]:
    s = "hilbert"
    out: List[Check] = []
    pipeline = gh.hilbert_S_pipeline()
    out.append(make_check(s, "hilbert-S", Poly([44, -160, 160]),
                          pipeline.euler_polynomial, "golden"))
    out.append(make_check(s, "restriction-degree-0", Poly([64]),
                          pipeline.plane_restriction[0], "golden"))
    out.append(make_check(s, "restriction-degree-1", Poly([-176, 160]),
                          pipeline.plane_restriction[1], "golden"))
    out.append(make_check(s, "restriction-degree-2", Poly([244, -400, 160]),
                          pipeline.plane_restriction[2], "golden"))
    out.append(make_check(s, "hilbert-V-from-S", Poly([22, -40, 20]),
                          gh.hilbert_V_from_S(), "oracle"))
    out.append(make_check(s, "hilbert-Wbar", Poly([22, -40, 20]),
                          gh.hilbert_Wbar(), "golden"))
    out.append(make_check(s, "two-route-agreement", gh.hilbert_Wbar(),
                          gh.hilbert_V_from_S(), "oracle"))
    out.append(make_check(s, "chi-OW-nPhi", Poly([14, -32, 20]),
                          gh.chi_OW_nPhi(), "golden"))
    out.append(make_check(s, "self-intersection", Fraction(16),
                          gh.self_intersection_Wtilde(), "golden"))
    out.append(make_check(s, "triple-total-curves", Fraction(8),
                          gh.triple_total_curves(), "oracle"))
    out.append(make_check(s, "triple-total-surfaces", Fraction(40),
                          gh.triple_total_surfaces(), "oracle"))
    return out


def _hodge_suite() -> List[Check]:
    s = "hodge"
    out: List[Check] = []
    out.append(make_check(s, "rank-pair-g5", (6, 72),
                          (hp.rank_Kpm(5).k_plus, hp.rank_Kpm(5).k_minus),
                          "golden"))
    out.append(make_check(s, "rank-pair-g4", (10, 0),
                          (hp.rank_Kpm(4).k_plus, hp.rank_Kpm(4).k_minus),
                          "golden"))
    out.append(make_check(s, "hodge-K-g5", (0, 16, 46, 16, 0),
                          hp.hodge_K(5).values, "golden"))
    out.append(make_check(s, "hodge-Kplus-g5", (0, 0, 6, 0, 0),
                          hp.hodge_Kplus(5).values, "golden"))
    ranks_ok = all(
        hp.hodge_Kplus(g).total() == hp.rank_Kpm(g).k_plus
        and hp.hodge_Kminus(g).total() == hp.rank_Kpm(g).k_minus
        for g in range(2, 11))
    out.append(make_check(s, "rank-cross-validation-g2-10", True, ranks_ok,
                          "oracle"))
    euler_ok = all(
        sum((-1) ** p * hp.chi_omega_p(g, p) for p in range(g))
        == hp.chi_theta(g) for g in range(2, 11))
    out.append(make_check(s, "alternating-euler-sum-g2-10", True, euler_ok,
                          "identity"))
    out.append(make_check(s, "eulerian-recurrence-g2-10", True,
                          all(hp.eulerian(g, p) == hp.eulerian_by_recurrence(g, p)
                              for g in range(2, 11) for p in range(g)),
                          "oracle"))
    residue_ok = all(
        hp.chi2_residue(g, p) == hp.chi2_closed(g, p)
        and hp.chi2_residue_z(g, p) == hp.chi2_closed(g, p)
        and hp.chi4_residue(g, p) == hp.chi4_closed(g, p)
        for g in range(2, 9) for p in range(g))
    out.append(make_check(s, "residue-equals-closed-g2-8", True, residue_ok,
                          "oracle"))
    identity_ok = all(hp.chi_quotient_identity(g, p)
                      for g in range(2, 9) for p in range(g))
    out.append(make_check(s, "quotient-identity-g2-8", True, identity_ok,
                          "identity"))
    out.append(make_check(s, "chi-theta-quotient-g5", (512, Fraction(308)),
                          hp.chi_theta_quotient(5), "golden"))
    return out


def _random_sym(g: int, d: int, rng: random.Random) -> SymClass:
    coeffs = {}
    for a in range(d + 1):
        for b in range(min(g, d - a) + 1):
            coeffs[(a, b)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return SymClass(g, d, coeffs)


def _ring_suite() -> List[Check]:
    s = "ring"
    rng = random.Random(271828)
    g, d = 6, 6
    triples = [tuple(_random_sym(g, d, rng) for _ in range(3))
               for _ in range(4)]
    comm = all(x * y == y * x for x, y, _ in triples)
    assoc = all((x * y) * z == x * (y * z) for x, y, z in triples)
    dist = all((x + y) * z == x * z + y * z for x, y, z in triples)
    unit = all(x * SymClass.one(g, d) == x for x, _, _ in triples)
    out = [
        make_check(s, "multiplication-commutes", True, comm, "identity"),
        make_check(s, "multiplication-associates", True, assoc, "identity"),
        make_check(s, "multiplication-distributes", True, dist, "identity"),
        make_check(s, "unit-element", True, unit, "identity"),
    ]
    eta, theta = SymClass.eta(g, d), SymClass.theta(g, d)
    out.append(make_check(s, "eta5-theta-integral", Fraction(6),
                          (eta ** 5 * theta).integrate_top(), "golden"))
    out.append(make_check(s, "eta4-theta2-integral", Fraction(30),
                          (eta ** 4 * theta ** 2).integrate_top(), "golden"))
    return out


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "hilbert": _hilbert_suite,
    "hodge": _hodge_suite,
    "lines": _lines_suite,
    "pairings": _pairings_suite,
    "primal": _primal_suite,
    "pushforward": _pushforward_suite,
    "ring": _ring_suite,
}


def run_suites(only: Optional[Sequence[str]] = None,
               command: str = "verify",
               flags: Optional[Dict[str, str]] = None) -> Report:
    """Run the named suites (all by default, in sorted order) and
    assemble a Report."""
    names = sorted(SUITES) if only is None else list(only)
    for name in names:
        if name not in SUITES:
            raise KeyError("unknown suite %r; choose from %s"
                           % (name, ", ".join(sorted(SUITES))))
    checks: List[Check] = []
    for name in names:
        checks.extend(SUITES[name]())
    return Report(command=command, flags=flags or {}, checks=tuple(checks))
