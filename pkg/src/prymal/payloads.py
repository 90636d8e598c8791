"""Machine-readable payloads for the CLI and the HTTP service.

Every payload is a plain dict of JSON-safe values, deterministic under
``json.dumps(..., sort_keys=True)``: no timestamps, no set iteration,
rationals rendered canonically as ``a/b``.  Each emitted group of
numbers carries a provenance tag (see :mod:`prymal.reports`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional

from . import cover_pushforward as cp
from . import cubic27
from . import grr_hilbert as gh
from . import hodge_primal as hp
from . import intersection_solver as isv
from .polynomials import Poly, format_poly, format_rational
from .reports import format_sym

VARIANTS = ("surfaces", "curves")
HILBERT_WHICH = ("S", "V", "W")
PUSHFORWARD_MAX_DEGREE = 12
PUSHFORWARD_MAX_GENUS = 24
HODGE_MAX_GENUS = 16


def tagged(value, provenance: str) -> dict:
    return {"provenance": provenance, "value": value}


def _poly_payload(p: Poly, provenance: str) -> dict:
    return tagged({
        "coefficients_ascending": [format_rational(c)
                                   for c in (p.coefficient(k)
                                             for k in range(p.degree() + 1))],
        "text": format_poly(p),
    }, provenance)


def health_payload() -> dict:
    from . import __version__
    return {"status": "ok", "version": __version__}


def lines_payload() -> dict:
    lines = cubic27.enumerate_lines()
    triples = sorted(sorted(l.label for l in t)
                     for t in cubic27.tritangent_triples())
    sixer_list = sorted(sorted(l.label for l in s) for s in cubic27.sixers())
    group = cubic27.weyl_group()
    return {
        "counts": tagged({
            "lines": len(lines),
            "roots": len(cubic27.roots()),
            "sixers": len(sixer_list),
            "tritangent_triples": len(triples),
            "weyl_order": group.order(),
        }, "golden"),
        "lines": tagged([{"coordinates": list(l.vector.coords),
                          "label": l.label} for l in lines], "derived"),
        "sixers": tagged(sixer_list, "derived"),
        "transitive": tagged({
            "on_lines": group.is_transitive(lines),
            "on_sixers": group.is_transitive(cubic27.sixers()),
        }, "identity"),
        "tritangent_triples": tagged(triples, "derived"),
    }


def _variant_parameters(variant: str):
    if variant == "surfaces":
        return Fraction(16), Fraction(40)
    if variant == "curves":
        return Fraction(0), Fraction(8)
    raise ValueError("unknown variant %r; choose from %s"
                     % (variant, ", ".join(VARIANTS)))


def pairings_payload(variant: str) -> dict:
    self_value, triple_total = _variant_parameters(variant)
    table = isv.solve_pairings(self_value, triple_total)
    base, slope = isv.verify_affine_form(table)
    gram = isv.gram_delta(table, isv.standard_config())
    scale = 2 if variant == "surfaces" else -2
    return {
        "affine_fit": tagged({"base": format_rational(base),
                              "slope": format_rational(slope)}, "golden"),
        "delta_gram": tagged({
            "determinant": format_rational(gram.determinant()),
            "entries": [list(row) for row in gram.entries],
            "generators": list(gram.generators),
            "isometric_to_e6_scaled": isv.check_E6_isometry(gram, scale),
            "scale": scale,
        }, "oracle"),
        "labels": [l.label for l in table.lines],
        "matrix": tagged([[format_rational(v) for v in row]
                          for row in table.values], "derived"),
        "self_value": tagged(format_rational(self_value), "golden"),
        "triple_total": tagged(format_rational(triple_total), "golden"),
        "variant": variant,
    }


def hodge_payload(g: int) -> dict:
    if not 2 <= g <= HODGE_MAX_GENUS:
        raise ValueError("need 2 <= g <= %d" % HODGE_MAX_GENUS)
    ranks = hp.rank_Kpm(g)
    chi_a, chi_t = hp.chi_theta_quotient(g)
    tag = "golden" if g in (4, 5) else "derived"
    return {
        "chi_quotients": tagged({
            "abelian": format_rational(chi_a),
            "theta": format_rational(chi_t),
        }, "oracle"),
        "chi_theta": tagged(format_rational(hp.chi_theta(g)), "derived"),
        "g": g,
        "hodge_K": tagged(list(hp.hodge_K(g).values), tag),
        "hodge_K_minus": tagged(list(hp.hodge_Kminus(g).values), tag),
        "hodge_K_plus": tagged(list(hp.hodge_Kplus(g).values), tag),
        "ranks": tagged({
            "k": hp.rank_K(g),
            "k_minus": ranks.k_minus,
            "k_plus": ranks.k_plus,
        }, tag),
    }


def hilbert_payload(which: str) -> dict:
    if which == "S":
        pipeline = gh.hilbert_S_pipeline()
        return {
            "hilbert": _poly_payload(pipeline.euler_polynomial, "golden"),
            "plane_restriction": tagged(
                [format_poly(p) for p in pipeline.plane_restriction],
                "golden"),
            "which": "S",
        }
    if which == "V":
        return {
            "hilbert": _poly_payload(gh.hilbert_V_from_S(), "oracle"),
            "two_route_agreement": tagged(
                gh.hilbert_V_from_S() == gh.hilbert_Wbar(), "oracle"),
            "which": "V",
        }
    if which == "W":
        return {
            "chi_nPhi": _poly_payload(gh.chi_OW_nPhi(), "golden"),
            "hilbert": _poly_payload(gh.hilbert_Wbar(), "golden"),
            "self_intersection": tagged(
                format_rational(gh.self_intersection_Wtilde()), "golden"),
            "which": "W",
        }
    raise ValueError("unknown --which %r; choose from %s"
                     % (which, ", ".join(HILBERT_WHICH)))


_GOLDEN_ENTRIES_66 = {(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}


def pushforward_payload(g: int, d: int) -> dict:
    if not 1 <= g <= PUSHFORWARD_MAX_GENUS:
        raise ValueError("need 1 <= g <= %d" % PUSHFORWARD_MAX_GENUS)
    if not 1 <= d <= PUSHFORWARD_MAX_DEGREE:
        raise ValueError("need 1 <= d <= %d" % PUSHFORWARD_MAX_DEGREE)
    entries: Dict[str, dict] = {}
    for p in range(d + 1):
        for q in range(d + 1 - p):
            x = cp.pushforward_closed(g, d, p, q)
            tag = ("golden" if (g, d) == (6, 6)
                   and (p, q) in _GOLDEN_ENTRIES_66 else "derived")
            entries["%d,%d" % (p, q)] = tagged({
                "class": format_sym(x),
                "coefficients": {"%d,%d" % k: format_rational(v)
                                 for k, v in sorted(x.coefficients.items())},
            }, tag)
    return {"d": d, "entries": entries, "g": g}


def verify_payload(only: Optional[List[str]] = None,
                   flags: Optional[Dict[str, str]] = None) -> dict:
    from .reports import run_suites
    return run_suites(only, command="verify", flags=flags or {}).as_dict()
