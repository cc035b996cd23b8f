"""Command-line interface.

Every subcommand is a thin client of the HTTP service: by default the
service runs in-process (no socket), and ``--server URL`` points the same
commands at a remote instance instead.  Structured results are printed as
JSON to stdout (or ``--out FILE``); diagrams go to stdout or files.

Exit codes: 0 — command ran and every check it performs passed;
1 — a check failed (not an automorphism, distance mismatch, decoding
failure, corpus drift); 2 — usage error (bad arguments or rejected input).
"""

from __future__ import annotations

import json
import sys
import warnings
from pathlib import Path

import click

_VECTOR_NAMES = ("hop_h", "hop_v", "flux", "stab", "flux+stab")


class Service:
    """Minimal JSON-over-HTTP client; in-process ASGI unless a URL is given."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .api import app

            self._client = TestClient(app)

    def get(self, path: str, params: dict | None = None) -> dict:
        return self._result(self._client.get(path, params=params))

    def post(self, path: str, payload: dict) -> dict:
        return self._result(self._client.post(path, json=payload))

    @staticmethod
    def _result(resp) -> dict:
        if resp.status_code >= 400:
            try:
                detail = resp.json().get("detail")
            except Exception:
                detail = resp.text
            raise click.UsageError(f"service error {resp.status_code}: {detail}")
        return resp.json()


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _emit_raw(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _finish(ok: bool) -> None:
    sys.exit(0 if ok else 1)


def _map_payload(auto: str | None, factors: str | None, matrix: str | None) -> dict:
    given = [v for v in (auto, factors, matrix) if v is not None]
    if len(given) != 1:
        raise click.UsageError("give exactly one of --auto, --factors, --matrix")
    if auto is not None:
        return {"expr": auto}
    if factors is not None:
        try:
            return {"factors": [int(tok) for tok in factors.replace(" ", "").split(",") if tok]}
        except ValueError as exc:
            raise click.UsageError(f"bad --factors value: {exc}") from exc
    doc = _load_json_arg(matrix, "--matrix")
    if isinstance(doc, dict) and "rows" in doc:
        return {"rows": doc["rows"]}
    if isinstance(doc, dict) and "matrix" in doc:
        return {"matrix": doc["matrix"]}
    if isinstance(doc, list):
        key = "rows" if doc and doc[0] and isinstance(doc[0][0], str) else "matrix"
        return {key: doc}
    raise click.UsageError("--matrix file must hold a 4x4 array or {matrix}/{rows} object")


def _load_json_arg(value: str, flag: str):
    """Parse a JSON argument given inline or as @path / bare path."""
    text = value
    if value.startswith("@"):
        text = Path(value[1:]).read_text()
    elif not value.lstrip().startswith(("{", "[")) and Path(value).is_file():
        text = Path(value).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"bad JSON for {flag}: {exc}") from exc


def _vector_payload(spec: str) -> dict:
    if spec in _VECTOR_NAMES:
        return {"name": spec}
    doc = _load_json_arg(spec, "--vector/--error")
    if isinstance(doc, dict) and "vector" in doc:
        doc = doc["vector"]
    if not isinstance(doc, dict):
        raise click.UsageError("vector JSON must be an object with a1/a2/c1/c2")
    return {k: doc[k] for k in ("a1", "a2", "c1", "c2") if k in doc}


def _parse_marks(marks: str | None) -> list[list[int]]:
    if not marks:
        return []
    out = []
    for chunk in marks.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            i, j = chunk.split(",")
            out.append([int(i), int(j)])
        except ValueError as exc:
            raise click.UsageError(f"bad --marks entry {chunk!r}: want 'i,j;i,j'") from exc
    return out


def _map_options(fn):
    fn = click.option("--auto", help="map name or product expression, e.g. 'A4*A7'")(fn)
    fn = click.option("--factors", help="comma-separated elementary indices, e.g. '4,7'")(fn)
    fn = click.option("--matrix", help="JSON matrix: inline, @file, or path")(fn)
    return fn


@click.group()
@click.version_option(package_name="fermicode")
@click.option(
    "--server",
    default=None,
    help="base URL of a running service; default runs the service in-process",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Fermion-to-qubit stabilizer codes on the square lattice."""
    ctx.obj = {"server": server}


def _svc(ctx: click.Context) -> Service:
    return Service(ctx.obj["server"])


@main.command()
@_map_options
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def verify(ctx, auto, factors, matrix, out):
    """Check the symplectic-automorphism identities for a map."""
    doc = _svc(ctx).post("/verify", {"map": _map_payload(auto, factors, matrix)})
    _emit(doc, out)
    _finish(doc["is_automorphism"])


@main.command()
@click.argument("names", nargs=-1)
@click.option("--factors", help="comma-separated elementary indices, e.g. '4,7'")
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def compose(ctx, names, factors, out):
    """Compose maps left to right (first named is applied first)."""
    if bool(names) == bool(factors):
        raise click.UsageError("give map names as arguments, or --factors, not both")
    if factors:
        maps = [{"factors": [int(tok) for tok in factors.replace(" ", "").split(",") if tok]}]
    else:
        maps = [{"expr": name} for name in names]
    doc = _svc(ctx).post("/compose", {"maps": maps})
    _emit(doc, out)
    _finish(doc["map"]["is_automorphism"])


@main.command()
@_map_options
@click.option(
    "--vector",
    required=True,
    help=f"operator: one of {', '.join(_VECTOR_NAMES)}, inline JSON, or @file",
)
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def apply(ctx, auto, factors, matrix, vector, out):
    """Apply a map to an operator and print the image."""
    doc = _svc(ctx).post(
        "/apply",
        {"map": _map_payload(auto, factors, matrix), "vector": _vector_payload(vector)},
    )
    _emit(doc, out)


@main.command()
@_map_options
@click.option("--radius", default=2, show_default=True, help="stabilizer-reduction window radius")
@click.option("--max-terms", default=4, show_default=True, help="stabilizer translates per reduction")
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def weights(ctx, auto, factors, matrix, radius, max_terms, out):
    """Operator weight statistics for the code built from a map."""
    payload = {
        "map": _map_payload(auto, factors, matrix),
        "radius": radius,
        "max_terms": max_terms,
    }
    _emit(_svc(ctx).post("/weights", payload), out)


@main.command()
@_map_options
@click.option("--max-weight", required=True, type=click.IntRange(1, 12))
@click.option("--node-cap", type=int, default=20_000_000, show_default=True)
@click.option("--time-cap", type=float, default=None, help="seconds before degrading to a bound")
@click.option(
    "--threads",
    type=click.IntRange(1),
    default=1,
    help="reserved for interface compatibility; the search runs single-threaded",
)
@click.option("--expect", type=int, default=None, help="fail (exit 1) unless exact distance equals this")
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def distance(ctx, auto, factors, matrix, max_weight, node_cap, time_cap, threads, expect, out):
    """Certify a code's distance by exhaustive syndrome-cancellation search."""
    svc = _svc(ctx)
    doc = svc.post(
        "/distance",
        {
            "code": _map_payload(auto, factors, matrix),
            "max_weight": max_weight,
            "node_cap": node_cap,
            "time_cap": time_cap,
        },
    )
    if doc.get("witness"):
        w = doc["witness"]
        rendered = svc.post(
            "/render",
            {"vector": {k: w[k] for k in ("a1", "a2", "c1", "c2")}, "format": "ascii"},
        )
        doc["witness_diagram"] = rendered["content"]
    _emit(doc, out)
    if expect is not None:
        _finish(doc["kind"] == "exact" and doc["distance"] == expect)


@main.command()
@click.option("--target-d", "target_d", required=True, type=click.IntRange(1, 10))
@click.option("--max-len", default=5, show_default=True, type=click.IntRange(1, 5))
@click.option("--confirm", is_flag=True, help="certify each shortlisted candidate exactly")
@click.option("--budget-nodes", type=int, default=5_000_000, show_default=True)
@click.option("--time-cap", type=float, default=None, help="per-candidate seconds")
@click.option("--total-time-cap", type=float, default=None, help="whole-sweep seconds")
@click.option("--limit", type=int, default=None, help="stop after this many hits")
@click.option("--ledger", type=click.Path(), default=None, help="append examined candidates as JSON lines")
@click.option("--resume", is_flag=True, help="skip candidates already in the ledger")
@click.option(
    "--threads",
    type=click.IntRange(1),
    default=1,
    help="reserved for interface compatibility; the search runs single-threaded",
)
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def search(ctx, target_d, max_len, confirm, budget_nodes, time_cap, total_time_cap, limit, ledger, resume, threads, out):
    """Sweep products of elementary maps for codes of at least a target distance."""
    skip = None
    if ledger and resume and Path(ledger).exists():
        skip = []
        for line in Path(ledger).read_text().splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                skip.append(json.loads(line)["factors"])
            except (json.JSONDecodeError, KeyError):
                continue
    doc = _svc(ctx).post(
        "/search",
        {
            "target_distance": target_d,
            "max_len": max_len,
            "limit": limit,
            "node_cap": budget_nodes,
            "time_cap": time_cap,
            "total_time_cap": total_time_cap,
            "confirm": confirm,
            "skip_factors": skip,
        },
    )
    if ledger:
        with Path(ledger).open("a") as fh:
            for rec in doc["examined"]:
                fh.write(json.dumps(rec, separators=(",", ":"), sort_keys=True) + "\n")
    _emit(doc, out)


@main.command()
@_map_options
@click.option("--error", required=True, help="error operator: name, inline JSON, or @file")
@click.option("--ascii", "show_ascii", is_flag=True, help="include an ASCII lattice diagram")
@click.option("--svg", "svg_path", type=click.Path(), default=None, help="write an SVG diagram here")
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def syndrome(ctx, auto, factors, matrix, error, show_ascii, svg_path, out):
    """Syndrome of an error: stabilizer translates it anticommutes with."""
    svc = _svc(ctx)
    code_payload = _map_payload(auto, factors, matrix)
    err_payload = _vector_payload(error)
    doc = svc.post("/syndrome", {"code": code_payload, "error": err_payload})
    marks = doc["syndrome"]
    if show_ascii:
        doc["diagram"] = svc.post(
            "/render", {"vector": err_payload, "format": "ascii", "marks": marks}
        )["content"]
    if svg_path:
        svg = svc.post(
            "/render", {"vector": err_payload, "format": "svg", "marks": marks}
        )["content"]
        _emit_raw(svg, svg_path)
    _emit(doc, out)


@main.command("decode-check")
@_map_options
@click.option("--L", "size", required=True, type=click.IntRange(2, 16), help="torus side length")
@click.option("--t", "t", default=1, show_default=True, type=click.IntRange(0, 3), help="correct all errors of weight <= t")
@click.option("--detect-w", type=click.IntRange(1, 6), default=None, help="also check detection up to this weight")
@click.option("--max-failures", default=10, show_default=True)
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def decode_check(ctx, auto, factors, matrix, size, t, detect_w, max_failures, out):
    """Exhaustively verify error correction on an L x L torus."""
    doc = _svc(ctx).post(
        "/decode-check",
        {
            "code": _map_payload(auto, factors, matrix),
            "L": size,
            "t": t,
            "detect_weight": detect_w,
            "max_failures": max_failures,
        },
    )
    _emit(doc, out)
    ok = doc["correction"]["correctable"]
    if doc.get("detection") is not None:
        ok = ok and doc["detection"]["detectable"]
    _finish(ok)


@main.command()
@click.option(
    "--vector",
    required=True,
    help=f"operator: one of {', '.join(_VECTOR_NAMES)}, inline JSON, or @file",
)
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]), default="ascii", show_default=True)
@click.option("--marks", default=None, help="vertices to mark, as 'i,j;i,j'")
@click.option("--cell", default=40, show_default=True, help="SVG cell size in pixels")
@click.option("--out", help="write the diagram here instead of stdout")
@click.pass_context
def render(ctx, vector, fmt, marks, cell, out):
    """Draw an operator on the lattice as ASCII or SVG."""
    doc = _svc(ctx).post(
        "/render",
        {
            "vector": _vector_payload(vector),
            "format": fmt,
            "marks": _parse_marks(marks),
            "cell": cell,
        },
    )
    _emit_raw(doc["content"], out)


@main.command()
@_map_options
@click.option("--L", "size", type=click.IntRange(2, 32), default=None, help="include torus rows for this side length")
@click.option("--format", "fmt", type=click.Choice(["json"]), default="json", show_default=True)
@click.option("--include-stats", is_flag=True, help="include weight statistics")
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def export(ctx, auto, factors, matrix, size, fmt, include_stats, out):
    """Export a code (and optional torus stabilizer/logical rows) as JSON."""
    doc = _svc(ctx).post(
        "/export",
        {
            "code": _map_payload(auto, factors, matrix),
            "L": size,
            "include_stats": include_stats,
        },
    )
    _emit(doc, out)


@main.command()
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def table1(ctx, out):
    """Weight summary for the bundled codes, checked against the frozen corpus."""
    doc = _svc(ctx).get("/table1")
    from . import corpus

    frozen = {row["expr"]: row for row in corpus.load("weight_table.json")["rows"]}
    ok = True
    for row in doc["rows"]:
        ref = frozen.get(row["expr"])
        row_ok = ref is not None and all(
            row[key] == ref[key]
            for key in ("distance", "hopping", "occupation", "stabilizer")
        )
        row["matches_corpus"] = row_ok
        ok = ok and row_ok
    doc["matches_corpus"] = ok and len(doc["rows"]) == len(frozen)
    _emit(doc, out)
    _finish(doc["matches_corpus"])


@main.command()
@click.option("--tier", type=click.Choice(["fast", "long", "all"]), default="all", show_default=True)
@click.option("--margin", type=click.IntRange(0, 3), default=0, show_default=True, help="search this far beyond each claim")
@click.option("--out", help="write JSON here instead of stdout")
@click.pass_context
def table2(ctx, tier, margin, out):
    """Certified distances for the bundled codes versus their claims."""
    doc = _svc(ctx).get("/table2", params={"tier": tier, "margin": margin})
    _emit(doc, out)
    _finish(all(row["match"] for row in doc["rows"]))


@main.command("corpus-check")
@click.option("--recertify-distances", is_flag=True, help="also re-run the exact distance searches")
def corpus_check(recertify_distances):
    """Verify the bundled data corpus (hashes, identities, recomputation)."""
    from . import corpus

    sys.exit(corpus.main(["--recertify-distances"] if recertify_distances else []))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("fermicode.api:app", host=host, port=port)


if __name__ == "__main__":
    main()
