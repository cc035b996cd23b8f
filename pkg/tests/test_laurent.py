"""Laurent polynomials over F2: ring axioms, conjugation, serialization."""

from hypothesis import given

from conftest import offsets, polys
from _props import suite

from fermicode.laurent import ONE, X, XB, Y, YB, ZERO, LaurentPoly


# --- ring axioms (headline property suite) ----------------------------------


@suite("ring-axioms", 2000)
@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@suite("ring-axioms", 1500)
@given(polys, polys, polys)
def test_addition_associates(p, q, r):
    assert (p + q) + r == p + (q + r)


@suite("ring-axioms", 1000)
@given(polys)
def test_addition_self_inverse_and_identity(p):
    assert p + p == ZERO
    assert p + ZERO == p


@suite("ring-axioms", 2000)
@given(polys, polys)
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@suite("ring-axioms", 1500)
@given(polys, polys, polys)
def test_multiplication_associates(p, q, r):
    assert (p * q) * r == p * (q * r)


@suite("ring-axioms", 1500)
@given(polys, polys, polys)
def test_multiplication_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@suite("ring-axioms", 1000)
@given(polys)
def test_multiplicative_identity_and_annihilator(p):
    assert p * ONE == p
    assert p * ZERO == ZERO


@suite("ring-axioms", 1500)
@given(polys, polys)
def test_conjugation_is_a_ring_involution(p, q):
    assert p.conj().conj() == p
    assert (p + q).conj() == p.conj() + q.conj()
    assert (p * q).conj() == p.conj() * q.conj()


# --- serialization and structure ---------------------------------------------


@suite("laurent-serialization", 1000)
@given(polys)
def test_text_round_trip(p):
    assert LaurentPoly.parse(str(p)) == p


@suite("laurent-serialization", 1000)
@given(polys)
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


@suite("laurent-structure", 500)
@given(polys, offsets)
def test_shift_is_monomial_multiplication(p, off):
    m, n = off
    assert p.shift(m, n) == p * LaurentPoly.monomial(m, n)


def test_named_monomials():
    assert X == LaurentPoly.monomial(1, 0)
    assert Y == LaurentPoly.monomial(0, 1)
    assert XB == LaurentPoly.monomial(-1, 0)
    assert YB == LaurentPoly.monomial(0, -1)
    assert X * XB == ONE
    assert Y * YB == ONE


def test_parse_examples():
    p = LaurentPoly.parse("1 + x^-1 y^2 + x y^-1")
    assert p.to_json() == [[-1, 2], [0, 0], [1, -1]]
    assert str(p) == "x^-1 y^2 + 1 + x y^-1"
    assert LaurentPoly.parse("0") == ZERO
    assert LaurentPoly.parse("x^2") == LaurentPoly.monomial(2, 0)


def test_terms_are_canonically_ordered():
    p = LaurentPoly.from_json([[2, 0], [-1, 3], [0, 0], [-1, -2]])
    assert p.terms() == ((-1, -2), (-1, 3), (0, 0), (2, 0))


def test_immutability():
    p = LaurentPoly.parse("1 + x")
    try:
        p._terms = frozenset()
    except AttributeError:
        pass
    else:
        raise AssertionError("LaurentPoly must be immutable")
