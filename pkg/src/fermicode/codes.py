"""Derived fermion-to-qubit codes and their weight statistics.

Applying a symplectic automorphism to the reference encoding of
:func:`fermicode.pauli.base_code` yields a new translation-invariant
stabilizer code with the same logical content but different operator
geometry.  A :class:`CodeFamily` bundles the map together with the images
of the nine generating local fermionic terms: the two elementary hoppings
(each bare, or dressed by one or both adjacent face-parity factors), and
the face parity itself.

Weight statistics mirror the headline figures of merit:

* ``hopping`` — min/max weight over the eight hopping-type images,
* ``occupation`` — weight of the face-parity image,
* ``stabilizer`` — weight of the vertex stabilizer image,

where hopping and occupation weights are quoted after reduction by
stabilizer translates (:func:`reduce_by_stabilizer`), which is how the
smallest achievable physical weight is measured; raw weights are kept
alongside.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .automorphisms import (
    SymplecticMap,
    compose_factors,
    expression_factors,
    factors_to_expression,
    identity,
    parse_expression,
)
from .laurent import XB, YB, LaurentPoly, ONE
from .pauli import BaseCode, PauliVec, base_code

__all__ = [
    "CodeFamily",
    "TermWeight",
    "WeightStats",
    "build_code",
    "reduce_by_stabilizer",
    "known_codes",
    "known_code_names",
    "NN_TERM_COUNT",
]

NN_TERM_COUNT = 9


def _nn_combos(bc: BaseCode) -> tuple[tuple[str, PauliVec], ...]:
    """The nine generating local terms of the reference encoding.

    A horizontal hopping sits between the face above it (parity factor at
    offset ``(0, 0)``) and the face below (offset ``(0, -1)``); a vertical
    hopping between the face to its right (``(0, 0)``) and left
    (``(-1, 0)``).  Dressing a hopping by adjacent parities produces the
    other hopping flavors; all four flavors per direction appear in a
    fermionic Hamiltonian's hopping and pairing terms.
    """
    u1, u2, w = bc.hop_h, bc.hop_v, bc.flux
    w_down = w.scale(YB)
    w_left = w.scale(XB)
    return (
        ("hop_h", u1),
        ("hop_v", u2),
        ("flux", w),
        ("hop_h*flux_up", u1 + w),
        ("hop_h*flux_down", u1 + w_down),
        ("hop_h*flux_up*flux_down", u1 + w + w_down),
        ("hop_v*flux_right", u2 + w),
        ("hop_v*flux_left", u2 + w_left),
        ("hop_v*flux_right*flux_left", u2 + w + w_left),
    )


def reduce_by_stabilizer(
    v: PauliVec,
    stab: PauliVec,
    radius: int = 2,
    max_terms: int = 4,
) -> tuple[PauliVec, LaurentPoly]:
    """Minimize the weight of ``v`` over products with stabilizer translates.

    Searches ``v + p * stab`` over multiplier polynomials ``p`` supported
    on at most ``max_terms`` monomials inside the ``(2*radius+1)``-square
    box around the origin, and returns the lightest representative along
    with the multiplier that achieves it.  Ties are broken by canonical
    serialization order, so the result is deterministic.
    """
    cands = [
        (i, j)
        for i in range(-radius, radius + 1)
        for j in range(-radius, radius + 1)
    ]
    translates = [stab.translate(i, j) for i, j in cands]

    def key(vec: PauliVec):
        return (vec.a1.terms(), vec.a2.terms(), vec.c1.terms(), vec.c2.terms())

    best = (v.weight(), key(v), v, LaurentPoly.zero())

    def rec(start: int, acc: PauliVec, mult: list[tuple[int, int]]) -> None:
        nonlocal best
        if mult:
            w = acc.weight()
            if w < best[0] or (w == best[0] and key(acc) < best[1]):
                best = (w, key(acc), acc, LaurentPoly(mult))
        if len(mult) >= max_terms:
            return
        for k in range(start, len(cands)):
            mult.append(cands[k])
            rec(k + 1, acc + translates[k], mult)
            mult.pop()

    rec(0, v, [])
    return best[2], best[3]


@dataclass(frozen=True)
class TermWeight:
    label: str
    raw: int
    reduced: int

    def to_json(self) -> dict:
        return {"label": self.label, "raw": self.raw, "reduced": self.reduced}


@dataclass(frozen=True)
class WeightStats:
    """Headline weight figures for a code (see module docstring)."""

    terms: tuple[TermWeight, ...]
    stabilizer: int

    @property
    def hopping_min(self) -> int:
        return min(t.reduced for t in self.terms if t.label != "flux")

    @property
    def hopping_max(self) -> int:
        return max(t.reduced for t in self.terms if t.label != "flux")

    @property
    def hopping_min_raw(self) -> int:
        return min(t.raw for t in self.terms if t.label != "flux")

    @property
    def hopping_max_raw(self) -> int:
        return max(t.raw for t in self.terms if t.label != "flux")

    @property
    def occupation(self) -> int:
        return next(t.reduced for t in self.terms if t.label == "flux")

    @property
    def occupation_raw(self) -> int:
        return next(t.raw for t in self.terms if t.label == "flux")

    def to_json(self) -> dict:
        return {
            "terms": [t.to_json() for t in self.terms],
            "hopping": [self.hopping_min, self.hopping_max],
            "hopping_raw": [self.hopping_min_raw, self.hopping_max_raw],
            "occupation": self.occupation,
            "occupation_raw": self.occupation_raw,
            "stabilizer": self.stabilizer,
        }


@dataclass(frozen=True)
class CodeFamily:
    """A fermion-to-qubit code cut out by one symplectic automorphism."""

    expr: str
    map: SymplecticMap
    hop_h: PauliVec
    hop_v: PauliVec
    flux: PauliVec
    stab: PauliVec
    nn_terms: tuple[tuple[str, PauliVec], ...]
    factors: tuple[int, ...] | None = None
    claimed_distance: int | None = None

    def logicals(self) -> tuple[PauliVec, PauliVec, PauliVec]:
        """The commutant generators: both hoppings and the face parity."""
        return (self.hop_h, self.hop_v, self.flux)

    def weight_stats(self, radius: int = 2, max_terms: int = 4) -> WeightStats:
        terms = tuple(
            TermWeight(
                label,
                vec.weight(),
                reduce_by_stabilizer(vec, self.stab, radius, max_terms)[0].weight(),
            )
            for label, vec in self.nn_terms
        )
        return WeightStats(terms=terms, stabilizer=self.stab.weight())

    def to_json(self, include_stats: bool = False) -> dict:
        doc = {
            "expr": self.expr,
            "factors": list(self.factors) if self.factors is not None else None,
            "map": self.map.to_json(),
            "stabilizer": self.stab.to_json(),
            "logicals": {
                "hop_h": self.hop_h.to_json(),
                "hop_v": self.hop_v.to_json(),
                "flux": self.flux.to_json(),
            },
            "nn_terms": [
                {"label": label, "vector": vec.to_json()} for label, vec in self.nn_terms
            ],
            "claimed_distance": self.claimed_distance,
        }
        if include_stats:
            doc["weight_stats"] = self.weight_stats().to_json()
        return doc


def build_code(
    map_or_expr: SymplecticMap | str | Sequence[int],
    claimed_distance: int | None = None,
) -> CodeFamily:
    """Construct the code cut out by an automorphism.

    Accepts a map, a product expression such as ``"A4*A7"``, or a plain
    sequence of elementary indices.  Rejects matrices that fail the
    pairing-preservation identities, since applying those would not give
    a code at all.
    """
    factors: tuple[int, ...] | None = None
    if isinstance(map_or_expr, str):
        expr = map_or_expr.strip() or "I"
        amap = parse_expression(expr)
        try:
            factors = expression_factors(expr)
        except ValueError:
            factors = None
    elif isinstance(map_or_expr, SymplecticMap):
        amap, expr = map_or_expr, "<matrix>"
    else:
        factors = tuple(int(k) for k in map_or_expr)
        amap = compose_factors(factors)
        expr = factors_to_expression(factors)

    if not amap.is_automorphism():
        raise ValueError("the map does not preserve the commutation pairing")

    bc = base_code()
    if claimed_distance is None and factors is not None:
        claimed_distance = _KNOWN_DISTANCES.get(factors)
    return CodeFamily(
        expr=expr,
        map=amap,
        hop_h=amap @ bc.hop_h,
        hop_v=amap @ bc.hop_v,
        flux=amap @ bc.flux,
        stab=amap @ bc.stab,
        nn_terms=tuple((label, amap @ vec) for label, vec in _nn_combos(bc)),
        factors=factors,
        claimed_distance=claimed_distance,
    )


# Codes with independently certified distances, keyed by factor list.
# ``tier`` marks how expensive the distance certification is: "fast"
# entries certify in seconds, "long" entries need a large search budget.
_KNOWN = (
    ("I", (), 2, "fast"),
    ("A1", (1,), 3, "fast"),
    ("A4*A7", (4, 7), 4, "fast"),
    ("A2*A7*A1", (2, 7, 1), 4, "fast"),
    ("A9*A3*A7*A14", (9, 3, 7, 14), 5, "fast"),
    ("A1*A5*A14*A1", (1, 5, 14, 1), 6, "long"),
    ("A4*A9*A16*A11", (4, 9, 16, 11), 6, "long"),
    ("A1*A11*A5*A14*A9", (1, 11, 5, 14, 9), 7, "long"),
)

_KNOWN_DISTANCES = {factors: d for _, factors, d, _ in _KNOWN}


def known_codes(tier: str | None = None) -> tuple[CodeFamily, ...]:
    """The bundled named codes, optionally filtered by certification tier."""
    out = []
    for name, factors, d, t in _KNOWN:
        if tier is not None and t != tier:
            continue
        out.append(build_code(factors, claimed_distance=d))
    return tuple(out)


def known_code_names() -> tuple[tuple[str, int, str], ...]:
    """(expression, claimed distance, tier) for each bundled code."""
    return tuple((name, d, t) for name, factors, d, t in _KNOWN)
