"""Pauli operators as length-4 Laurent vectors: weights, pairing, transport."""

from hypothesis import given
from hypothesis import strategies as st

from conftest import offsets, pauli_singles, vecs
from _props import suite

from fermicode.laurent import LaurentPoly
from fermicode.pauli import (
    HORIZONTAL,
    VERTICAL,
    PauliVec,
    base_code,
    commutes_at_origin,
    dot,
    single,
)


# --- pairing (dot) ------------------------------------------------------------


@suite("pauli-pairing", 1500)
@given(vecs, vecs)
def test_dot_is_conjugate_symmetric(v, w):
    assert dot(w, v) == dot(v, w).conj()


@suite("pauli-pairing", 1500)
@given(vecs, vecs, vecs)
def test_dot_is_biadditive(u, v, w):
    assert dot(u + v, w) == dot(u, w) + dot(v, w)
    assert dot(u, v + w) == dot(u, v) + dot(u, w)


@suite("pauli-pairing", 1500)
@given(vecs, vecs, offsets)
def test_dot_translation_rule(v, w, off):
    """Translating the left argument shifts the pairing the opposite way.

    The coefficient of x^m y^n in dot(v, w) records whether v translated
    by (m, n) anticommutes with w, so translating v by (a, b) re-indexes
    that table by (-a, -b).
    """
    a, b = off
    assert dot(v.translate(a, b), w) == dot(v, w).shift(-a, -b)
    assert dot(v, w.translate(a, b)) == dot(v, w).shift(a, b)


@suite("pauli-pairing", 2000)
@given(
    st.sampled_from([HORIZONTAL, VERTICAL]),
    st.sampled_from(["X", "Y", "Z"]),
    st.sampled_from([HORIZONTAL, VERTICAL]),
    st.sampled_from(["X", "Y", "Z"]),
    st.integers(-2, 2),
    st.integers(-2, 2),
)
def test_single_edge_anticommutation_oracle(o1, l1, o2, l2, i, j):
    """Two single-edge Paulis anticommute iff same edge, different letter."""
    v = single(o1, l1)
    w = single(o2, l2, i, j)
    expect_anticommute = (o1 == o2) and (i, j) == (0, 0) and l1 != l2
    assert commutes_at_origin(v, w) == (not expect_anticommute)
    # and the same fact read off the pairing's constant term
    assert dot(v, w).constant_term == (1 if expect_anticommute else 0)


# --- weights and transport ----------------------------------------------------


@suite("pauli-weight", 1000)
@given(vecs, vecs)
def test_weight_subadditive(v, w):
    assert (v + w).weight() <= v.weight() + w.weight()


@suite("pauli-weight", 1000)
@given(vecs, offsets)
def test_weight_translation_invariant(v, off):
    assert v.translate(*off).weight() == v.weight()


@suite("pauli-weight", 500)
@given(pauli_singles)
def test_single_edge_weight(v):
    assert v.weight() == 1
    assert len(v.edges()) == 1


def test_edge_overlap_counts_once():
    """X and Z on the same edge (i.e. Y) contribute weight 1, not 2."""
    y_edge = single(HORIZONTAL, "X") + single(HORIZONTAL, "Z")
    assert y_edge == single(HORIZONTAL, "Y")
    assert y_edge.weight() == 1
    assert y_edge.edges() == ((0, 0, HORIZONTAL, "Y"),)


@suite("pauli-serialization", 1000)
@given(vecs)
def test_vec_json_round_trip(v):
    assert PauliVec.from_json(v.to_json()) == v


@suite("pauli-serialization", 500)
@given(vecs)
def test_vec_addition_cancels(v):
    assert (v + v).is_zero


# --- the reference code --------------------------------------------------------


def test_base_code_commutation_table():
    bc = base_code()
    # stabilizer commutes with everything in the code, including itself
    for vec in (bc.hop_h, bc.hop_v, bc.flux, bc.stab):
        assert not dot(bc.stab, vec)
    # hopping terms anticommute with specific neighbouring flux translates
    assert dot(bc.hop_h, bc.flux) == LaurentPoly.parse("1 + y")
    assert dot(bc.hop_v, bc.flux) == LaurentPoly.parse("1 + x")
    assert dot(bc.hop_h, bc.hop_v) == LaurentPoly.parse("x^-1 + y")


def test_base_code_vectors():
    bc = base_code()
    assert str(bc.hop_h) == "[1, 0 | 0, y^-1]"
    assert str(bc.hop_v) == "[0, 1 | x^-1, 0]"
    assert str(bc.flux) == "[0, 0 | 1 + y, 1 + x]"
    assert str(bc.stab) == "[x^-1 + 1, y^-1 + 1 | 1 + y, 1 + x]"


def test_text_round_trip_vectors():
    bc = base_code()
    for vec in (bc.hop_h, bc.hop_v, bc.flux, bc.stab):
        a1, a2, c1, c2 = (str(p) for p in (vec.a1, vec.a2, vec.c1, vec.c2))
        assert PauliVec.from_text(a1, a2, c1, c2) == vec
