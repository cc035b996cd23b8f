"""Pydantic request/response models for the HTTP service.

Requests accept maps and operators in every serialized form the library
itself understands:

* a map as a name/expression (``"A1"``, ``"A4*A7"``), a factor list
  (``[4, 7]``), a JSON matrix, or text rows;
* an operator as a named generator of the reference code (``"hop_h"``,
  ``"flux+stab"``, ...) or as its four components, each either a
  polynomial text (``"1 + x y^-1"``) or a ``[[i, j], ...]`` term list.

``resolve()`` on the input models turns a request into a library object and
raises :class:`ValueError` with a human-readable message on bad input; the
route layer converts that to a 400 response.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from ..automorphisms import SymplecticMap, compose_factors, parse_expression
from ..pauli import PauliVec, base_code
from ..laurent import LaurentPoly

PolyJSON = list[tuple[int, int]]
PolyIn = Union[str, PolyJSON]

SOURCE_NAMES = ("hop_h", "hop_v", "flux", "stab", "flux+stab")


def _poly(value: PolyIn) -> LaurentPoly:
    if isinstance(value, str):
        return LaurentPoly.parse(value)
    return LaurentPoly.from_json(value)


class MapSpec(BaseModel):
    """A symplectic map, given in exactly one of four forms."""

    expr: Optional[str] = Field(
        default=None, description="name or product expression, e.g. 'A4*A7'"
    )
    factors: Optional[list[int]] = Field(
        default=None, description="elementary indices applied left to right"
    )
    matrix: Optional[list[list[PolyJSON]]] = Field(
        default=None, description="4x4 matrix of polynomial term lists"
    )
    rows: Optional[list[list[str]]] = Field(
        default=None, description="4x4 matrix of polynomial texts"
    )

    @model_validator(mode="after")
    def _exactly_one(self) -> "MapSpec":
        given = [
            name
            for name in ("expr", "factors", "matrix", "rows")
            if getattr(self, name) is not None
        ]
        if len(given) != 1:
            raise ValueError(
                f"exactly one of expr/factors/matrix/rows required, got {given or 'none'}"
            )
        return self

    def resolve(self) -> SymplecticMap:
        if self.expr is not None:
            return parse_expression(self.expr)
        if self.factors is not None:
            return compose_factors(tuple(self.factors))
        if self.matrix is not None:
            return SymplecticMap.from_json(self.matrix)
        assert self.rows is not None
        return SymplecticMap.from_text(self.rows)

    def label(self) -> str:
        """Short human-readable description for response payloads."""
        if self.expr is not None:
            return self.expr
        if self.factors is not None:
            return "*".join(f"A{k}" for k in self.factors) if self.factors else "I"
        return "<matrix>"


class VecSpec(BaseModel):
    """A Pauli operator: a named reference generator, or four components."""

    name: Optional[Literal["hop_h", "hop_v", "flux", "stab", "flux+stab"]] = None
    a1: Optional[PolyIn] = None
    a2: Optional[PolyIn] = None
    c1: Optional[PolyIn] = None
    c2: Optional[PolyIn] = None

    @model_validator(mode="after")
    def _name_xor_components(self) -> "VecSpec":
        has_components = any(
            getattr(self, f) is not None for f in ("a1", "a2", "c1", "c2")
        )
        if (self.name is None) == (not has_components):
            raise ValueError("give either name or components a1/a2/c1/c2, not both")
        return self

    def resolve(self) -> PauliVec:
        if self.name is not None:
            bc = base_code()
            return {
                "hop_h": bc.hop_h,
                "hop_v": bc.hop_v,
                "flux": bc.flux,
                "stab": bc.stab,
                "flux+stab": bc.flux + bc.stab,
            }[self.name]
        return PauliVec(
            a1=_poly(self.a1 or []),
            a2=_poly(self.a2 or []),
            c1=_poly(self.c1 or []),
            c2=_poly(self.c2 or []),
        )


class VecOut(BaseModel):
    """An operator in canonical serialized form."""

    a1: PolyJSON
    a2: PolyJSON
    c1: PolyJSON
    c2: PolyJSON
    text: str
    weight: int

    @classmethod
    def of(cls, vec: PauliVec) -> "VecOut":
        doc = vec.to_json()
        return cls(**doc, text=str(vec), weight=vec.weight())


class MapOut(BaseModel):
    """A map in canonical serialized form plus its self-check report."""

    rows: list[list[str]]
    matrix: list[list[PolyJSON]]
    is_automorphism: bool
    identities: dict[str, bool]

    @classmethod
    def of(cls, m: SymplecticMap) -> "MapOut":
        report = m.automorphism_report()
        return cls(
            rows=[[str(p) for p in row] for row in m.rows],
            matrix=m.to_json(),
            is_automorphism=all(report.values()),
            identities=report,
        )


class HealthOut(BaseModel):
    status: str
    version: str


class VerifyIn(BaseModel):
    map: MapSpec


class VerifyOut(BaseModel):
    label: str
    is_automorphism: bool
    identities: dict[str, bool]


class ComposeIn(BaseModel):
    maps: list[MapSpec] = Field(min_length=1, description="applied left to right")


class ComposeOut(BaseModel):
    map: MapOut


class ApplyIn(BaseModel):
    map: MapSpec
    vector: VecSpec


class ApplyOut(BaseModel):
    vector: VecOut


class WeightsIn(BaseModel):
    map: MapSpec
    radius: int = Field(default=2, ge=0, le=4)
    max_terms: int = Field(default=4, ge=1, le=6)


class TermWeightOut(BaseModel):
    label: str
    raw: int
    reduced: int


class WeightsOut(BaseModel):
    label: str
    terms: list[TermWeightOut]
    hopping: tuple[int, int]
    hopping_raw: tuple[int, int]
    occupation: int
    occupation_raw: int
    stabilizer: int


class SyndromeIn(BaseModel):
    code: MapSpec
    error: VecSpec


class SyndromeOut(BaseModel):
    label: str
    syndrome: list[tuple[int, int]]
    error_weight: int
    commutes: bool
    is_logical: Optional[bool] = Field(
        default=None,
        description="set only when the syndrome is empty: whether the error acts on the code space",
    )


class DistanceIn(BaseModel):
    code: MapSpec
    max_weight: int = Field(ge=1, le=12)
    node_cap: Optional[int] = Field(default=20_000_000, ge=1)
    time_cap: Optional[float] = Field(default=None, gt=0)


class DistanceOut(BaseModel):
    label: str
    kind: Literal["exact", "lower_bound"]
    distance: int
    witness: Optional[VecOut]
    witness_weight: Optional[int]
    nodes: int
    seconds: float
    level_sizes: list[int]
    capped: Optional[str] = Field(
        default=None, description="which budget stopped a lower-bound search, if any"
    )
    max_weight: int


class SearchIn(BaseModel):
    target_distance: int = Field(ge=1, le=10)
    max_len: int = Field(default=5, ge=1, le=5)
    limit: Optional[int] = Field(default=None, ge=1)
    node_cap: Optional[int] = Field(default=5_000_000, ge=1)
    time_cap: Optional[float] = Field(default=None, gt=0)
    total_time_cap: Optional[float] = Field(default=None, gt=0)
    confirm: bool = True
    skip_factors: Optional[list[list[int]]] = Field(
        default=None,
        description="factor sequences to skip (e.g. already present in a caller-side ledger)",
    )


class SearchHitOut(BaseModel):
    expr: str
    factors: list[int]
    estimate: int
    result: Optional[DistanceOut]


class SearchOut(BaseModel):
    target_distance: int
    hits: list[SearchHitOut]
    count: int
    examined: list[SearchHitOut] = Field(
        default_factory=list,
        description="every candidate whose estimate reached the target, hit or miss",
    )


class DecodeCheckIn(BaseModel):
    code: MapSpec
    L: int = Field(ge=2, le=16)
    t: int = Field(default=1, ge=0, le=3)
    detect_weight: Optional[int] = Field(default=None, ge=1, le=6)
    max_failures: int = Field(default=10, ge=1, le=100)


class CorrectionOut(BaseModel):
    errors_checked: int
    distinct_syndromes: int
    correctable: bool
    failures: list[dict]
    seconds: float


class DetectionOut(BaseModel):
    w: int
    half_errors_enumerated: int
    detectable: bool
    undetected_error: Optional[list[list]] = None
    seconds: float


class DecodeCheckOut(BaseModel):
    label: str
    L: int
    qubits: int
    stabilizer_rank: int
    t: int
    correction: CorrectionOut
    detection: Optional[DetectionOut] = None


class ExportIn(BaseModel):
    code: MapSpec
    L: Optional[int] = Field(default=None, ge=2, le=32)
    include_stats: bool = False


class RenderIn(BaseModel):
    vector: VecSpec
    format: Literal["ascii", "svg"] = "ascii"
    marks: list[tuple[int, int]] = Field(default_factory=list)
    cell: int = Field(default=40, ge=10, le=200)


class RenderOut(BaseModel):
    format: str
    content: str


class WeightTableRowOut(BaseModel):
    expr: str
    factors: list[int]
    distance: int
    tier: str
    hopping: tuple[int, int]
    occupation: int
    stabilizer: int


class WeightTableOut(BaseModel):
    rows: list[WeightTableRowOut]


class DistanceTableRowOut(BaseModel):
    expr: str
    claimed: int
    tier: str
    kind: str
    distance: int
    match: bool
    nodes: int
    level_sizes: list[int]


class DistanceTableOut(BaseModel):
    tier: str
    rows: list[DistanceTableRowOut]
