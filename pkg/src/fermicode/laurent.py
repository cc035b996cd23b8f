"""Laurent polynomials in two variables over the two-element field F2.

Every object in this package is ultimately built from these polynomials:
a polynomial ``p = sum x^i y^j`` over F2 is represented by the finite set
of exponent pairs ``(i, j)`` that carry a nonzero coefficient.  Addition
is symmetric difference of those sets, multiplication is convolution of
exponents (mod-2 collection of coefficients), and ``conj`` is the ring
automorphism ``x -> x^-1, y -> y^-1``.

The canonical ordering of terms everywhere (serialization, string form,
tie-breaking) is lexicographic: ``i`` ascending, then ``j`` ascending.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

__all__ = ["LaurentPoly", "ZERO", "ONE", "X", "Y", "XB", "YB"]

_TERM_RE = re.compile(r"(?:(?P<one>1)|(?P<var>[xy])(?:\^(?P<exp>-?\d+))?)\s*")


class LaurentPoly:
    """An immutable Laurent polynomial over F2 in the variables x and y.

    Instances are hashable and support ``+`` (which is also subtraction,
    since coefficients live in F2) and ``*``.  The zero polynomial is
    falsy; every other polynomial is truthy.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[int, int]] = ()) -> None:
        """Build a polynomial from exponent pairs.

        Pairs appearing an even number of times cancel, so the argument is
        interpreted as a *sum* of monomials, not a set.
        """
        acc: set[tuple[int, int]] = set()
        for ij in terms:
            i, j = ij
            key = (int(i), int(j))
            if key in acc:
                acc.remove(key)
            else:
                acc.add(key)
        object.__setattr__(self, "_terms", frozenset(acc))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def monomial(cls, i: int, j: int) -> "LaurentPoly":
        return cls(((i, j),))

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse a human-readable polynomial such as ``"1 + x^-1 y^2"``.

        Grammar: terms separated by ``+``; a term is ``0``, ``1`` or a
        product of ``x``/``y`` factors with optional integer exponents
        written ``x^-1``, ``y^2`` (juxtaposition means multiplication).
        """
        text = text.strip()
        if text in ("", "0"):
            return _ZERO
        terms = []
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if chunk == "0":
                continue
            i = j = 0
            pos = 0
            seen = False
            while pos < len(chunk):
                m = _TERM_RE.match(chunk, pos)
                if not m or m.end() == pos:
                    raise ValueError(f"cannot parse polynomial term {chunk!r}")
                if m.group("var") == "x":
                    i += int(m.group("exp") or 1)
                elif m.group("var") == "y":
                    j += int(m.group("exp") or 1)
                seen = True
                pos = m.end()
            if not seen:
                raise ValueError(f"empty polynomial term in {text!r}")
            terms.append((i, j))
        return cls(terms)

    # -- serialization ------------------------------------------------

    def terms(self) -> tuple[tuple[int, int], ...]:
        """The exponent pairs with nonzero coefficient, canonically sorted."""
        return tuple(sorted(self._terms))

    @property
    def support(self) -> frozenset[tuple[int, int]]:
        return self._terms

    def to_json(self) -> list[list[int]]:
        """Canonical JSON form: sorted array of ``[i, j]`` pairs."""
        return [[i, j] for i, j in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls(tuple((int(i), int(j)) for i, j in data))

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", self._terms ^ other._terms)
        return out

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        # F2 convolution: collect exponent sums, keeping those with odd count.
        acc: set[tuple[int, int]] = set()
        small, large = sorted((self._terms, other._terms), key=len)
        for a, b in small:
            for c, d in large:
                key = (a + c, b + d)
                if key in acc:
                    acc.remove(key)
                else:
                    acc.add(key)
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", frozenset(acc))
        return out

    def conj(self) -> "LaurentPoly":
        """The bar involution ``x -> x^-1, y -> y^-1`` (an F2-algebra map)."""
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", frozenset((-i, -j) for i, j in self._terms))
        return out

    def shift(self, di: int, dj: int) -> "LaurentPoly":
        """Multiply by the monomial ``x^di y^dj``."""
        if di == 0 and dj == 0:
            return self
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(
            out, "_terms", frozenset((i + di, j + dj) for i, j in self._terms)
        )
        return out

    # -- queries -------------------------------------------------------

    @property
    def constant_term(self) -> int:
        """The coefficient of ``x^0 y^0`` (0 or 1)."""
        return 1 if (0, 0) in self._terms else 0

    def weight(self) -> int:
        """Number of monomials (the Hamming weight of the coefficient list)."""
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, j in self.terms():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            parts.append(" ".join(factors) if factors else "1")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms()!r})"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")


_ZERO = LaurentPoly()
_ONE = LaurentPoly(((0, 0),))

#: Convenience constants for building expressions in code and tests.
ZERO = _ZERO
ONE = _ONE
X = LaurentPoly.monomial(1, 0)
Y = LaurentPoly.monomial(0, 1)
XB = LaurentPoly.monomial(-1, 0)
YB = LaurentPoly.monomial(0, -1)
