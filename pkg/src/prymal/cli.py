"""Command-line front end.

Every subcommand computes locally by default; pass ``--url`` to fetch
the same payload from a running service instead (start one with
``prymal serve``).  Output is deterministic: repeated runs are
byte-identical.  The environment variable ``PRYMAL_TRUNCATION``
overrides the default power-series truncation order.

Exit codes: 0 on success, 1 when a verification check fails, 2 on
usage errors.
"""

from __future__ import annotations

import json
import sys
from typing import Dict, List, Optional

import click

from . import payloads
from .reports import Check, Report, run_suites

FORMATS = ("json", "md", "csv")


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _fetch(url: str, path: str, params: Dict[str, str]) -> dict:
    import httpx

    try:
        response = httpx.get(url.rstrip("/") + path, params=params,
                             timeout=120.0)
    except httpx.HTTPError as exc:
        raise click.ClickException("service request failed: %s" % exc)
    if response.status_code == 422:
        detail = response.json().get("detail", "invalid parameters")
        raise click.UsageError("service rejected parameters: %s" % detail)
    if response.status_code != 200:
        raise click.ClickException("service returned status %d"
                                   % response.status_code)
    return response.json()


def _payload_or_fetch(url: Optional[str], path: str,
                      params: Dict[str, str], local) -> dict:
    if url:
        return _fetch(url, path, params)
    try:
        return local()
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _echo(text: str) -> None:
    click.echo(text, nl=False)


# ----------------------------------------------------------------------
# markdown / csv renderers (operate on payload dicts)

def _render_lines(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(payload)
    counts = payload["counts"]["value"]
    if fmt == "csv":
        rows = ["label,a,b1,b2,b3,b4,b5,b6"]
        for entry in payload["lines"]["value"]:
            rows.append(entry["label"] + ","
                        + ",".join(str(c) for c in entry["coordinates"]))
        return "\n".join(rows) + "\n"
    out = ["# line configuration", ""]
    out.append("lines: %d, tritangent triples: %d, sixers: %d, roots: %d, "
               "symmetry order: %d" % (
                   counts["lines"], counts["tritangent_triples"],
                   counts["sixers"], counts["roots"], counts["weyl_order"]))
    transitive = payload["transitive"]["value"]
    out.append("transitive on lines: %s, on sixers: %s"
               % (transitive["on_lines"], transitive["on_sixers"]))
    out.append("")
    out.append("| label | class |")
    out.append("|---|---|")
    for entry in payload["lines"]["value"]:
        out.append("| %s | (%s) |" % (
            entry["label"], ", ".join(str(c) for c in entry["coordinates"])))
    return "\n".join(out) + "\n"


def _render_pairings(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(payload)
    labels = payload["labels"]
    matrix = payload["matrix"]["value"]
    if fmt == "csv":
        return "\n".join(",".join(row) for row in matrix) + "\n"
    fit = payload["affine_fit"]["value"]
    gram = payload["delta_gram"]["value"]
    out = ["# pairing table (%s)" % payload["variant"], ""]
    out.append("self value %s, triple total %s; affine fit: %s %+d * (L.L')"
               % (payload["self_value"]["value"],
                  payload["triple_total"]["value"],
                  fit["base"], int(fit["slope"])))
    out.append("delta-Gram determinant %s, scaled-E6 isometry: %s (scale %d)"
               % (gram["determinant"], gram["isometric_to_e6_scaled"],
                  gram["scale"]))
    out.append("")
    out.append("| | " + " | ".join(labels) + " |")
    out.append("|" + "---|" * (len(labels) + 1))
    for label, row in zip(labels, matrix):
        out.append("| %s | " % label + " | ".join(row) + " |")
    return "\n".join(out) + "\n"


def _render_hodge(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(payload)
    vec = {name: payload[name]["value"]
           for name in ("hodge_K", "hodge_K_plus", "hodge_K_minus")}
    if fmt == "csv":
        rows = ["name," + ",".join("p%d" % k
                                   for k in range(len(vec["hodge_K"])))]
        for name in ("hodge_K", "hodge_K_plus", "hodge_K_minus"):
            rows.append(name + "," + ",".join(str(v) for v in vec[name]))
        return "\n".join(rows) + "\n"
    ranks = payload["ranks"]["value"]
    chi = payload["chi_quotients"]["value"]
    out = ["# primal Hodge data (g = %d)" % payload["g"], ""]
    out.append("hodge_K       = (%s)" % ", ".join(map(str, vec["hodge_K"])))
    out.append("hodge_K_plus  = (%s)"
               % ", ".join(map(str, vec["hodge_K_plus"])))
    out.append("hodge_K_minus = (%s)"
               % ", ".join(map(str, vec["hodge_K_minus"])))
    out.append("ranks: K = %d, K+ = %d, K- = %d"
               % (ranks["k"], ranks["k_plus"], ranks["k_minus"]))
    out.append("Euler characteristics: theta divisor %s, "
               "quotient theta %s, quotient abelian %s"
               % (payload["chi_theta"]["value"], chi["theta"],
                  chi["abelian"]))
    return "\n".join(out) + "\n"


def _render_hilbert(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(payload)
    poly = payload["hilbert"]["value"]
    if fmt == "csv":
        coeffs = poly["coefficients_ascending"]
        return ("which," + ",".join("c%d" % k for k in range(len(coeffs)))
                + "\n" + payload["which"] + "," + ",".join(coeffs) + "\n")
    out = ["hilbert_%s(n) = %s" % (payload["which"], poly["text"])]
    if "plane_restriction" in payload:
        out.append("restriction by degree: (%s)"
                   % " | ".join(payload["plane_restriction"]["value"]))
    if "chi_nPhi" in payload:
        out.append("chi(nPhi) = %s" % payload["chi_nPhi"]["value"]["text"])
    if "self_intersection" in payload:
        out.append("self-intersection = %s"
                   % payload["self_intersection"]["value"])
    if "two_route_agreement" in payload:
        out.append("two independent routes agree: %s"
                   % payload["two_route_agreement"]["value"])
    return "\n".join(out) + "\n"


def _render_pushforward(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(payload)
    keys = sorted(payload["entries"],
                  key=lambda k: tuple(int(x) for x in k.split(",")))
    if fmt == "csv":
        rows = ["p,q,image"]
        for key in keys:
            rows.append("%s,%s" % (key,
                                   payload["entries"][key]["value"]["class"]))
        return "\n".join(rows) + "\n"
    out = ["# pushforward table (g = %d, d = %d)"
           % (payload["g"], payload["d"]), ""]
    for key in keys:
        p, q = key.split(",")
        out.append("(p=%s, q=%s) -> %s"
                   % (p, q, payload["entries"][key]["value"]["class"]))
    return "\n".join(out) + "\n"


_RENDERERS = {
    "lines": _render_lines,
    "pairings": _render_pairings,
    "hodge": _render_hodge,
    "hilbert": _render_hilbert,
    "pushforward": _render_pushforward,
}


def _report_from_payload(payload: dict) -> Report:
    checks = tuple(Check(suite=c["suite"], name=c["name"],
                         status=c["status"], expected=c["expected"],
                         computed=c["computed"], provenance=c["provenance"])
                   for c in payload["checks"])
    return Report(command=payload["command"], flags=payload["flags"],
                  checks=checks)


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="md",
    show_default=True, help="Output format.")
url_option = click.option(
    "--url", default=None, metavar="URL",
    help="Fetch from a running service instead of computing locally.")


@click.group()
@click.version_option(package_name="prymal")
def cli() -> None:
    """Exact-arithmetic verification engine: line configurations,
    pairing tables, double-cover pushforwards, Hilbert polynomials,
    and primal Hodge machinery, all over the rationals."""


@cli.command()
@click.option("--only", default=None, metavar="SUITE[,SUITE...]",
              help="Run only the named check suites.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@url_option
def verify(only: Optional[str], as_json: bool, url: Optional[str]) -> None:
    """Run the acceptance checks; exit 0 iff all pass."""
    names: Optional[List[str]] = (
        [s for s in only.split(",") if s] if only else None)
    flags = {"only": only} if only else {}
    if url:
        payload = _fetch(url, "/api/verify", {"only": only} if only else {})
        report = _report_from_payload(payload)
    else:
        try:
            report = run_suites(names, flags=flags)
        except KeyError as exc:
            raise click.UsageError(str(exc.args[0]))
        except ValueError as exc:
            raise click.UsageError(str(exc))
    _echo(report.to_json() if as_json else report.to_markdown())
    if not report.passed:
        failing = ", ".join(c.suite + "/" + c.name for c in report.failures())
        click.echo("failing checks: %s" % failing, err=True)
        sys.exit(1)


@cli.command()
@url_option
def lines(url: Optional[str]) -> None:
    """The 27 lines, their incidence combinatorics, and symmetry."""
    _run_table("lines", {}, "md", url)


@cli.command()
@click.option("--variant", type=click.Choice(payloads.VARIANTS),
              default="surfaces", show_default=True,
              help="Which pairing table to solve.")
@format_option
@url_option
def pairings(variant: str, fmt: str, url: Optional[str]) -> None:
    """The 27 x 27 pairing table solved from the triple constraints."""
    _run_table("pairings", {"variant": variant}, fmt, url)


@cli.command()
@click.option("--g", "g", type=int, default=5, show_default=True,
              help="Abelian-variety dimension.")
@format_option
@url_option
def hodge(g: int, fmt: str, url: Optional[str]) -> None:
    """Primal Hodge numbers, eigenpart ranks, Euler characteristics."""
    _run_table("hodge", {"g": g}, fmt, url)


@cli.command()
@click.option("--which", type=click.Choice(payloads.HILBERT_WHICH),
              default="V", show_default=True,
              help="Which Hilbert polynomial to emit.")
@format_option
@url_option
def hilbert(which: str, fmt: str, url: Optional[str]) -> None:
    """Hilbert polynomials of the special surface and its quotients."""
    _run_table("hilbert", {"which": which}, fmt, url)


@cli.command()
@click.option("--g", "g", type=int, default=6, show_default=True,
              help="Base-curve genus.")
@click.option("--d", "d", type=int, default=6, show_default=True,
              help="Symmetric-power degree.")
@format_option
@url_option
def pushforward(g: int, d: int, fmt: str, url: Optional[str]) -> None:
    """Closed-form double-cover pushforward table on symmetric powers."""
    _run_table("pushforward", {"g": g, "d": d}, fmt, url)


def _run_table(name: str, params: dict, fmt: str, url: Optional[str]) -> None:
    local = {
        "lines": lambda: payloads.lines_payload(),
        "pairings": lambda: payloads.pairings_payload(params.get("variant")),
        "hodge": lambda: payloads.hodge_payload(params.get("g")),
        "hilbert": lambda: payloads.hilbert_payload(params.get("which")),
        "pushforward": lambda: payloads.pushforward_payload(
            params.get("g"), params.get("d")),
    }[name]
    payload = _payload_or_fetch(
        url, "/api/" + name, {k: str(v) for k, v in params.items()}, local)
    _echo(_RENDERERS[name](payload, fmt))


@cli.command()
@format_option
@url_option
def tables(fmt: str, url: Optional[str]) -> None:
    """Every golden table in one bundle (json or md only)."""
    if fmt == "csv":
        raise click.UsageError("csv is not supported for the bundle; "
                               "use a single-table command instead")
    sections = [
        ("lines", {}, lambda: payloads.lines_payload()),
        ("pairings", {"variant": "surfaces"},
         lambda: payloads.pairings_payload("surfaces")),
        ("pairings", {"variant": "curves"},
         lambda: payloads.pairings_payload("curves")),
        ("pushforward", {"g": 6, "d": 6},
         lambda: payloads.pushforward_payload(6, 6)),
        ("hilbert", {"which": "S"}, lambda: payloads.hilbert_payload("S")),
        ("hilbert", {"which": "V"}, lambda: payloads.hilbert_payload("V")),
        ("hilbert", {"which": "W"}, lambda: payloads.hilbert_payload("W")),
        ("hodge", {"g": 4}, lambda: payloads.hodge_payload(4)),
        ("hodge", {"g": 5}, lambda: payloads.hodge_payload(5)),
    ]
    if fmt == "json":
        bundle = []
        for name, params, local in sections:
            payload = _payload_or_fetch(
                url, "/api/" + name,
                {k: str(v) for k, v in params.items()}, local)
            bundle.append({"params": {k: str(v) for k, v in params.items()},
                           "payload": payload, "table": name})
        _echo(_dump_json({"tables": bundle}))
        return
    parts = []
    for name, params, local in sections:
        payload = _payload_or_fetch(
            url, "/api/" + name, {k: str(v) for k, v in params.items()},
            local)
        parts.append(_RENDERERS[name](payload, "md"))
    _echo("\n".join(parts))


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run("prymal.service:app", host=host, port=port)


main = cli


if __name__ == "__main__":
    main()
