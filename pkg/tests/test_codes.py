"""Code construction, the nine nearest-neighbour terms, and weight statistics."""

import pytest
from hypothesis import given

from conftest import sym_maps
from _props import suite

from fermicode.codes import (
    NN_TERM_COUNT,
    build_code,
    known_code_names,
    known_codes,
    reduce_by_stabilizer,
)
from fermicode.laurent import X
from fermicode.pauli import PauliVec, base_code, dot
from fermicode.automorphisms import SymplecticMap, identity


def test_identity_code_is_the_reference_code():
    code = build_code("I")
    bc = base_code()
    assert code.hop_h == bc.hop_h
    assert code.hop_v == bc.hop_v
    assert code.flux == bc.flux
    assert code.stab == bc.stab
    assert code.claimed_distance == 2


def test_build_code_accepts_expr_factors_and_map():
    by_expr = build_code("A4*A7")
    by_factors = build_code((4, 7))
    by_map = build_code(by_expr.map)
    assert by_expr.stab == by_factors.stab == by_map.stab
    assert by_expr.claimed_distance == by_factors.claimed_distance == 4


def test_build_code_rejects_non_automorphism():
    rows = [list(row) for row in identity().rows]
    rows[2][0] = X
    bad = SymplecticMap(rows=tuple(tuple(r) for r in rows))
    with pytest.raises(ValueError):
        build_code(bad)


@suite("code-construction", 300)
@given(sym_maps)
def test_constructed_codes_are_internally_consistent(m):
    code = build_code(m)
    for logical in code.logicals():
        assert not dot(code.stab, logical)
    assert not dot(code.stab, code.stab)
    # the images inherit the reference commutation table
    bc = base_code()
    assert dot(code.hop_h, code.flux) == dot(bc.hop_h, bc.flux)
    assert dot(code.hop_h, code.hop_v) == dot(bc.hop_h, bc.hop_v)


def test_nine_nn_terms():
    code = build_code("I")
    assert NN_TERM_COUNT == 9
    assert len(code.nn_terms) == 9
    labels = [label for label, _ in code.nn_terms]
    assert labels == [
        "hop_h",
        "hop_v",
        "flux",
        "hop_h*flux_up",
        "hop_h*flux_down",
        "hop_h*flux_up*flux_down",
        "hop_v*flux_right",
        "hop_v*flux_left",
        "hop_v*flux_right*flux_left",
    ]
    for _, vec in code.nn_terms:
        assert not dot(code.stab, vec)


@suite("stabilizer-reduction", 200)
@given(sym_maps)
def test_reduction_stays_in_the_coset_and_never_grows(m):
    code = build_code(m)
    for _, vec in code.nn_terms[:3]:
        reduced, mult = reduce_by_stabilizer(vec, code.stab)
        assert reduced + code.stab.scale(mult) == vec
        assert reduced.weight() <= vec.weight()


def test_reduction_finds_known_improvements():
    code = build_code("I")
    # raw flux weight is 4; two stabilizer translates bring it to... itself
    reduced, _ = reduce_by_stabilizer(code.flux, code.stab)
    assert reduced.weight() == 4
    # the d=6 code's hop_v drops from raw 12 via stabilizer multiples
    code6 = build_code("A1*A5*A14*A1")
    reduced6, mult6 = reduce_by_stabilizer(code6.hop_v, code6.stab)
    assert code6.hop_v.weight() == 12
    assert reduced6.weight() == 12  # hop_v is already minimal here
    stats = code6.weight_stats()
    assert (stats.hopping_min, stats.hopping_max) == (6, 13)


def test_weight_stats_match_frozen_table():
    from fermicode import corpus

    frozen = {row["expr"]: row for row in corpus.load("weight_table.json")["rows"]}
    for code in known_codes():
        stats = code.weight_stats()
        row = frozen[code.expr]
        assert [stats.hopping_min, stats.hopping_max] == row["hopping"]
        assert stats.occupation == row["occupation"]
        assert stats.stabilizer == row["stabilizer"]


def test_known_codes_routing():
    names = known_code_names()
    assert [n for n, _, _ in names] == [
        "I",
        "A1",
        "A4*A7",
        "A2*A7*A1",
        "A9*A3*A7*A14",
        "A1*A5*A14*A1",
        "A4*A9*A16*A11",
        "A1*A11*A5*A14*A9",
    ]
    fast = known_codes("fast")
    long_tier = known_codes("long")
    assert len(fast) == 5 and len(long_tier) == 3
    assert [c.claimed_distance for c in fast] == [2, 3, 4, 4, 5]
    assert [c.claimed_distance for c in long_tier] == [6, 6, 7]


def test_code_json_round_trip_of_map():
    code = build_code("A9*A3*A7*A14")
    doc = code.to_json(include_stats=True)
    assert doc["expr"] == "A9*A3*A7*A14"
    assert doc["weight_stats"]["hopping"] == [5, 9]
    assert SymplecticMap.from_json(doc["map"]) == code.map
    assert PauliVec.from_json(doc["stabilizer"]) == code.stab
