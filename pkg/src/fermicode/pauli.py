"""Translation-invariant Pauli operators on the edges of the square lattice.

A Pauli operator (up to phase) on the infinite square lattice, with one
qubit per edge, is encoded as a length-4 vector of Laurent polynomials

    ``(a1, a2 | c1, c2)``

where ``a1``/``a2`` give the X-part on horizontal/vertical edges and
``c1``/``c2`` the Z-part on the same split.  The monomial ``x^i y^j`` in
component 1 refers to the horizontal edge from vertex ``(i, j)`` to
``(i+1, j)``; in component 2, to the vertical edge from ``(i, j)`` to
``(i, j+1)``.  An edge carrying both an X and a Z factor carries a single
Y (phases are never tracked).

The antisymmetric pairing :func:`dot` measures commutation between all
relative translates at once: the coefficient of ``x^m y^n`` in
``dot(v, w)`` is 1 exactly when ``v.translate(m, n)`` anticommutes with
``w``.  In particular the constant term decides commutation of the
operators as placed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .laurent import ONE, XB, YB, ZERO, LaurentPoly, X, Y

__all__ = [
    "PauliVec",
    "BaseCode",
    "dot",
    "commutes_at_origin",
    "single",
    "base_code",
    "HORIZONTAL",
    "VERTICAL",
]

#: Edge orientations (component indices 1 and 2 of the vector).
HORIZONTAL = 0
VERTICAL = 1

_LETTERS = ("X", "Y", "Z")


@dataclass(frozen=True)
class PauliVec:
    """A translation-finite Pauli operator as an ``(a1, a2 | c1, c2)`` vector."""

    a1: LaurentPoly = ZERO
    a2: LaurentPoly = ZERO
    c1: LaurentPoly = ZERO
    c2: LaurentPoly = ZERO

    # -- module structure ----------------------------------------------

    def __add__(self, other: "PauliVec") -> "PauliVec":
        """The product of the two Pauli operators, up to phase."""
        if not isinstance(other, PauliVec):
            return NotImplemented
        return PauliVec(
            self.a1 + other.a1,
            self.a2 + other.a2,
            self.c1 + other.c1,
            self.c2 + other.c2,
        )

    def scale(self, p: LaurentPoly) -> "PauliVec":
        """Multiply every component by the polynomial ``p``.

        Geometrically this replaces the operator by the product of its
        translates ``{(i, j) in p}``.
        """
        return PauliVec(p * self.a1, p * self.a2, p * self.c1, p * self.c2)

    def translate(self, m: int, n: int) -> "PauliVec":
        """Shift the whole operator by the lattice vector ``(m, n)``."""
        return PauliVec(
            self.a1.shift(m, n),
            self.a2.shift(m, n),
            self.c1.shift(m, n),
            self.c2.shift(m, n),
        )

    def is_zero(self) -> bool:
        return not (self.a1 or self.a2 or self.c1 or self.c2)

    # -- geometry --------------------------------------------------------

    def weight(self) -> int:
        """Number of edges acted on non-trivially (Y counts once)."""
        return len(self.a1.support | self.c1.support) + len(
            self.a2.support | self.c2.support
        )

    def edges(self) -> tuple[tuple[int, int, int, str], ...]:
        """All acted-on edges as ``(i, j, orientation, letter)``, sorted."""
        out = []
        for orient, (a, c) in enumerate(((self.a1, self.c1), (self.a2, self.c2))):
            for ij in a.support | c.support:
                has_x = ij in a.support
                has_z = ij in c.support
                letter = "Y" if (has_x and has_z) else ("X" if has_x else "Z")
                out.append((ij[0], ij[1], orient, letter))
        return tuple(sorted(out))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict[str, list[list[int]]]:
        return {
            "a1": self.a1.to_json(),
            "a2": self.a2.to_json(),
            "c1": self.c1.to_json(),
            "c2": self.c2.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PauliVec":
        return cls(*(LaurentPoly.from_json(data.get(k, ())) for k in ("a1", "a2", "c1", "c2")))

    @classmethod
    def from_text(cls, a1: str = "0", a2: str = "0", c1: str = "0", c2: str = "0") -> "PauliVec":
        """Build from four human-readable polynomial strings."""
        return cls(*(LaurentPoly.parse(s) for s in (a1, a2, c1, c2)))

    def __str__(self) -> str:
        return f"[{self.a1}, {self.a2} | {self.c1}, {self.c2}]"


def dot(v: "PauliVec", w: "PauliVec") -> LaurentPoly:
    """The translation-resolved commutation pairing.

    ``dot(v, w) = conj(a1_v) c1_w + conj(a2_v) c2_w + conj(c1_v) a1_w
    + conj(c2_v) a2_w``.  The coefficient of ``x^m y^n`` is 1 iff
    ``v.translate(m, n)`` anticommutes with ``w``; equivalently iff ``v``
    anticommutes with ``w.translate(-m, -n)``.
    """
    return (
        v.a1.conj() * w.c1
        + v.a2.conj() * w.c2
        + v.c1.conj() * w.a1
        + v.c2.conj() * w.a2
    )


def commutes_at_origin(v: PauliVec, w: PauliVec) -> bool:
    """Whether the two operators, as placed, commute (no translates applied)."""
    return dot(v, w).constant_term == 0


def single(orientation: int, letter: str, i: int = 0, j: int = 0) -> PauliVec:
    """A single Pauli ``letter`` on the edge of the given orientation at ``(i, j)``."""
    if orientation not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"orientation must be 0 (horizontal) or 1 (vertical), got {orientation!r}")
    if letter not in _LETTERS:
        raise ValueError(f"letter must be one of {_LETTERS}, got {letter!r}")
    m = LaurentPoly.monomial(i, j)
    a = m if letter in ("X", "Y") else ZERO
    c = m if letter in ("Z", "Y") else ZERO
    if orientation == HORIZONTAL:
        return PauliVec(a1=a, c1=c)
    return PauliVec(a2=a, c2=c)


class BaseCode(NamedTuple):
    """The generating operators of the reference fermion-to-qubit encoding.

    ``hop_h``/``hop_v`` are the images of the elementary horizontal and
    vertical Majorana hopping terms, ``flux`` is the image of the face
    (plaquette) fermion-parity term, and ``stab`` is the vertex stabilizer
    whose translates generate the constraint group.
    """

    hop_h: PauliVec
    hop_v: PauliVec
    flux: PauliVec
    stab: PauliVec


def base_code() -> BaseCode:
    """The reference encoding all other codes are derived from.

    * ``hop_h = [1, 0 | 0, y^-1]`` — X on a horizontal edge dressed by Z
      on the vertical edge below its right endpoint's predecessor row.
    * ``hop_v = [0, 1 | x^-1, 0]`` — the 90-degree counterpart.
    * ``flux = [0, 0 | 1+y, 1+x]`` — Z around two sides of a face.
    * ``stab = [1+x^-1, 1+y^-1 | 1+y, 1+x]`` — the weight-6 vertex operator.
    """
    one_plus_y = ONE + Y
    one_plus_x = ONE + X
    return BaseCode(
        hop_h=PauliVec(a1=ONE, c2=YB),
        hop_v=PauliVec(a2=ONE, c1=XB),
        flux=PauliVec(c1=one_plus_y, c2=one_plus_x),
        stab=PauliVec(a1=ONE + XB, a2=ONE + YB, c1=one_plus_y, c2=one_plus_x),
    )


def pauli_letters() -> tuple[str, ...]:
    """The single-qubit Pauli letters, in canonical order."""
    return _LETTERS


def all_singles() -> tuple[PauliVec, ...]:
    """The six single-edge Paulis at the origin, in canonical order.

    Order: orientation major (horizontal then vertical), letter minor
    (X, Y, Z).
    """
    return tuple(
        single(o, letter)
        for o in (HORIZONTAL, VERTICAL)
        for letter in _LETTERS
    )


def parse_iterable(vs: Iterable[dict]) -> list[PauliVec]:
    """Deserialize a JSON array of vectors."""
    return [PauliVec.from_json(d) for d in vs]
