"""HTTP service exposing the code-construction and verification toolkit.

Every route is a thin wrapper over the library: requests resolve to library
objects via the input models, library ``ValueError``s become 400 responses,
and outputs use the same canonical JSON forms the library serializes itself.

The two ``GET /table*`` reports are pure functions of the bundled code
definitions (no clock, no randomness — timing fields are stripped), so
repeated calls return byte-identical payloads.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..automorphisms import named_map, map_names
from ..codes import CodeFamily, build_code, known_code_names, known_codes
from ..distance import code_distance
from ..pauli import dot
from ..render import render_ascii, render_svg
from ..search import search_codes
from ..syndromes import in_stabilizer_group, syndrome
from ..torus import correct_all_errors, detect_up_to, materialize
from .models import (
    ApplyIn,
    ApplyOut,
    ComposeIn,
    ComposeOut,
    CorrectionOut,
    DecodeCheckIn,
    DecodeCheckOut,
    DetectionOut,
    DistanceIn,
    DistanceOut,
    DistanceTableOut,
    DistanceTableRowOut,
    ExportIn,
    HealthOut,
    MapOut,
    MapSpec,
    RenderIn,
    RenderOut,
    SearchHitOut,
    SearchIn,
    SearchOut,
    SyndromeIn,
    SyndromeOut,
    TermWeightOut,
    VecOut,
    VerifyIn,
    VerifyOut,
    WeightsIn,
    WeightsOut,
    WeightTableOut,
    WeightTableRowOut,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="fermicode",
        version=__version__,
        description=(
            "Fermion-to-qubit stabilizer codes on the square lattice: "
            "symplectic map algebra, code construction, exact distance "
            "certification, code search, and exhaustive torus decoding checks."
        ),
    )

    def resolve_map(spec: MapSpec):
        try:
            return spec.resolve()
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    def resolve_code(spec: MapSpec) -> CodeFamily:
        try:
            if spec.expr is not None:
                return build_code(spec.expr)
            if spec.factors is not None:
                return build_code(tuple(spec.factors))
            return build_code(spec.resolve())
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    def resolve_vec(spec) -> "PauliVec":
        try:
            return spec.resolve()
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    def distance_out(label: str, res) -> DistanceOut:
        return DistanceOut(
            label=label,
            kind=res.kind,
            distance=res.distance,
            witness=VecOut.of(res.witness) if res.witness is not None else None,
            witness_weight=res.witness_weight,
            nodes=res.nodes,
            seconds=round(res.seconds, 3),
            level_sizes=list(res.level_sizes),
            capped=res.capped,
            max_weight=res.max_weight,
        )

    @app.get("/health", response_model=HealthOut)
    def health() -> HealthOut:
        return HealthOut(status="ok", version=__version__)

    @app.get("/automorphisms")
    def automorphisms() -> dict:
        return {
            "named_maps": list(map_names()),
            "bundled_codes": [
                {"expr": expr, "distance": d, "tier": tier}
                for expr, d, tier in known_code_names()
            ],
        }

    @app.get("/automorphisms/{name}", response_model=MapOut)
    def automorphism_detail(name: str) -> MapOut:
        try:
            m = named_map(name)
        except ValueError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return MapOut.of(m)

    @app.post("/verify", response_model=VerifyOut)
    def verify(body: VerifyIn) -> VerifyOut:
        m = resolve_map(body.map)
        report = m.automorphism_report()
        return VerifyOut(
            label=body.map.label(),
            is_automorphism=all(report.values()),
            identities=report,
        )

    @app.post("/compose", response_model=ComposeOut)
    def compose(body: ComposeIn) -> ComposeOut:
        maps = [resolve_map(spec) for spec in body.maps]
        product = maps[0]
        for m in maps[1:]:
            product = product.compose(m)
        return ComposeOut(map=MapOut.of(product))

    @app.post("/apply", response_model=ApplyOut)
    def apply(body: ApplyIn) -> ApplyOut:
        m = resolve_map(body.map)
        vec = resolve_vec(body.vector)
        return ApplyOut(vector=VecOut.of(m @ vec))

    @app.post("/weights", response_model=WeightsOut)
    def weights(body: WeightsIn) -> WeightsOut:
        code = resolve_code(body.map)
        stats = code.weight_stats(radius=body.radius, max_terms=body.max_terms)
        return WeightsOut(
            label=code.expr,
            terms=[
                TermWeightOut(label=t.label, raw=t.raw, reduced=t.reduced)
                for t in stats.terms
            ],
            hopping=(stats.hopping_min, stats.hopping_max),
            hopping_raw=(stats.hopping_min_raw, stats.hopping_max_raw),
            occupation=stats.occupation,
            occupation_raw=stats.occupation_raw,
            stabilizer=stats.stabilizer,
        )

    @app.post("/syndrome", response_model=SyndromeOut)
    def syndrome_route(body: SyndromeIn) -> SyndromeOut:
        code = resolve_code(body.code)
        err = resolve_vec(body.error)
        pattern = syndrome(code, err)
        commutes = not pattern
        logical = None
        if commutes:
            logical = not in_stabilizer_group(code, err)
        return SyndromeOut(
            label=code.expr,
            syndrome=[tuple(t) for t in pattern],
            error_weight=err.weight(),
            commutes=commutes,
            is_logical=logical,
        )

    @app.post("/distance", response_model=DistanceOut)
    def distance(body: DistanceIn) -> DistanceOut:
        code = resolve_code(body.code)
        res = code_distance(
            code,
            max_weight=body.max_weight,
            node_cap=body.node_cap,
            time_cap=body.time_cap,
        )
        return distance_out(code.expr, res)

    @app.post("/search", response_model=SearchOut)
    def search(body: SearchIn) -> SearchOut:
        def hit_out(h) -> SearchHitOut:
            return SearchHitOut(
                expr=h.candidate.expr,
                factors=list(h.candidate.factors),
                estimate=h.estimate,
                result=None
                if h.result is None
                else distance_out(h.candidate.expr, h.result),
            )

        examined: list = []
        hits = search_codes(
            target_distance=body.target_distance,
            max_len=body.max_len,
            limit=body.limit,
            node_cap=body.node_cap,
            time_cap=body.time_cap,
            total_time_cap=body.total_time_cap,
            confirm=body.confirm,
            skip_factors=None
            if body.skip_factors is None
            else [tuple(f) for f in body.skip_factors],
            examined=examined,
        )
        out = [hit_out(h) for h in hits]
        return SearchOut(
            target_distance=body.target_distance,
            hits=out,
            count=len(out),
            examined=[hit_out(h) for h in examined],
        )

    @app.post("/decode-check", response_model=DecodeCheckOut)
    def decode_check(body: DecodeCheckIn) -> DecodeCheckOut:
        code = resolve_code(body.code)
        try:
            tc = materialize(code, body.L)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        correction = correct_all_errors(tc, body.t, max_failures=body.max_failures)
        detection = None
        if body.detect_weight is not None:
            det = detect_up_to(tc, body.detect_weight)
            detection = DetectionOut(
                w=det["w"],
                half_errors_enumerated=det["half_errors_enumerated"],
                detectable=det["detectable"],
                undetected_error=det["undetected_error"],
                seconds=det["seconds"],
            )
        return DecodeCheckOut(
            label=code.expr,
            L=tc.L,
            qubits=tc.n,
            stabilizer_rank=tc.rank,
            t=body.t,
            correction=CorrectionOut(
                errors_checked=correction["errors_checked"],
                distinct_syndromes=correction["distinct_syndromes"],
                correctable=correction["correctable"],
                failures=correction["failures"],
                seconds=correction["seconds"],
            ),
            detection=detection,
        )

    @app.post("/export")
    def export(body: ExportIn) -> dict:
        code = resolve_code(body.code)
        doc = code.to_json(include_stats=body.include_stats)
        if body.L is not None:
            try:
                tc = materialize(code, body.L)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from exc
            doc["torus"] = tc.to_json()
        return doc

    @app.post("/render", response_model=RenderOut)
    def render(body: RenderIn) -> RenderOut:
        vec = resolve_vec(body.vector)
        marks = [tuple(m) for m in body.marks]
        if body.format == "svg":
            return RenderOut(format="svg", content=render_svg(vec, marks, cell=body.cell))
        return RenderOut(format="ascii", content=render_ascii(vec, marks))

    @app.get("/table1", response_model=WeightTableOut)
    def table1() -> WeightTableOut:
        tiers = {expr: tier for expr, _, tier in known_code_names()}
        rows = []
        for code in known_codes():
            stats = code.weight_stats()
            rows.append(
                WeightTableRowOut(
                    expr=code.expr,
                    factors=list(code.factors),
                    distance=code.claimed_distance,
                    tier=tiers[code.expr],
                    hopping=(stats.hopping_min, stats.hopping_max),
                    occupation=stats.occupation,
                    stabilizer=stats.stabilizer,
                )
            )
        return WeightTableOut(rows=rows)

    @app.get("/table2", response_model=DistanceTableOut)
    def table2(
        tier: Literal["fast", "long", "all"] = "all", margin: int = 0
    ) -> DistanceTableOut:
        tiers = {expr: t for expr, _, t in known_code_names()}
        selected = known_codes(None if tier == "all" else tier)
        rows = []
        for code in selected:
            res = code_distance(code, max_weight=code.claimed_distance + margin)
            rows.append(
                DistanceTableRowOut(
                    expr=code.expr,
                    claimed=code.claimed_distance,
                    tier=tiers[code.expr],
                    kind=res.kind,
                    distance=res.distance,
                    match=res.kind == "exact" and res.distance == code.claimed_distance,
                    nodes=res.nodes,
                    level_sizes=list(res.level_sizes),
                )
            )
        return DistanceTableOut(tier=tier, rows=rows)

    return app


app = create_app()
