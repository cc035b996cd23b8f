"""Syndrome maps: linearity, translation covariance, logical classification."""

from hypothesis import given
from hypothesis import strategies as st

from conftest import errors, offsets, small_polys, vecs
from _props import suite

from fermicode.codes import build_code
from fermicode.pauli import PauliVec, dot
from fermicode.syndromes import (
    commutes_with_stabilizers,
    in_stabilizer_group,
    is_logical,
    syndrome,
)

CODES = [build_code(expr) for expr in ("I", "A1", "A4*A7", "A9*A3*A7*A14")]
code_pool = st.sampled_from(CODES)


# --- headline property suite ---------------------------------------------------


@suite("syndrome-linearity-covariance", 5_000)
@given(code_pool, vecs, vecs)
def test_syndrome_is_linear(code, e1, e2):
    s1 = set(syndrome(code, e1))
    s2 = set(syndrome(code, e2))
    assert set(syndrome(code, e1 + e2)) == s1 ^ s2


@suite("syndrome-linearity-covariance", 5_000)
@given(code_pool, vecs, offsets)
def test_syndrome_translates_with_the_error(code, err, off):
    a, b = off
    moved = syndrome(code, err.translate(a, b))
    assert set(moved) == {(i + a, j + b) for (i, j) in syndrome(code, err)}


# --- classification --------------------------------------------------------------


@suite("syndrome-classification", 1000)
@given(code_pool, small_polys)
def test_stabilizer_multiples_are_trivial(code, mult):
    op = code.stab.scale(mult)
    assert not syndrome(code, op)
    assert commutes_with_stabilizers(code, op)
    assert in_stabilizer_group(code, op)
    assert not is_logical(code, op)


@suite("syndrome-classification", 1000)
@given(code_pool, small_polys)
def test_logicals_stay_logical_modulo_stabilizer(code, mult):
    for logical in code.logicals():
        op = logical + code.stab.scale(mult)
        assert commutes_with_stabilizers(code, op)
        assert is_logical(code, op)
        assert not in_stabilizer_group(code, op)


@suite("syndrome-classification", 800)
@given(code_pool, errors)
def test_classification_matches_syndrome_emptiness(code, err):
    has_syndrome = bool(syndrome(code, err))
    assert commutes_with_stabilizers(code, err) == (not has_syndrome)
    if has_syndrome:
        assert not is_logical(code, err)


def test_in_stabilizer_group_requires_commuting_input():
    import pytest

    code = build_code("A1")
    err = PauliVec.from_text("1", "0", "0", "0")
    assert syndrome(code, err)
    with pytest.raises(ValueError):
        in_stabilizer_group(code, err)


def test_frozen_single_error_syndromes():
    """Single-edge error syndromes match the frozen corpus patterns."""
    from fermicode import corpus
    from fermicode.pauli import HORIZONTAL, VERTICAL, single

    doc = corpus.load("syndrome_patterns.json")
    for rec in doc["codes"]:
        code = build_code(rec["expr"])
        for key, stored in rec["patterns"].items():
            oname, letter = key.split(":")
            orient = HORIZONTAL if oname == "h" else VERTICAL
            fresh = [list(t) for t in syndrome(code, single(orient, letter))]
            assert fresh == stored, (rec["expr"], key)


def test_identity_code_sees_z_erors_as_vertex_pairs():
    code = build_code("I")
    from fermicode.pauli import HORIZONTAL, single

    assert syndrome(code, single(HORIZONTAL, "Z")) == ((0, 0), (1, 0))
