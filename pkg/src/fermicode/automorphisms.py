"""Symplectic automorphisms of the edge Pauli module.

A linear map on ``(a1, a2 | c1, c2)`` vectors is given by a 4x4 matrix
over the Laurent ring.  It descends to an automorphism of the Pauli
algebra (mapping each single-edge Pauli to a finite Pauli operator while
preserving all commutation relations between all translates) exactly
when it preserves the pairing :func:`fermicode.pauli.dot`; in block form
``[[a, b], [c, d]]`` that is the three identities

* ``a~ d + c~ b = I``  (pairing identity),
* ``a~ c = c~ a``      (X-sector symmetry),
* ``b~ d = d~ b``      (Z-sector symmetry),

where ``~`` is conjugate-transpose (entrywise bar, then transpose).

Sixteen sparse elementary automorphisms generate the searchable family
used throughout the package; they come in two shapes, each deviating from
the identity in exactly two entries:

* shear types, adding an X-to-Z (or Z-to-X) coupling between the two edge
  orientations (``elementary(1..4)`` fill the ``c`` block,
  ``elementary(5..8)`` the ``b`` block);
* transvection types, mixing the two orientations within the X sector and
  compensating in the Z sector (``elementary(9..16)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import ONE, XB, YB, ZERO, LaurentPoly, X, Y

from .pauli import PauliVec

__all__ = [
    "SymplecticMap",
    "identity",
    "elementary",
    "ELEMENTARY_COUNT",
    "compose",
    "compose_factors",
    "named_map",
    "map_names",
    "parse_expression",
    "factors_to_expression",
]

ELEMENTARY_COUNT = 16

_Row = tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]


@dataclass(frozen=True)
class SymplecticMap:
    """A 4x4 matrix over the Laurent ring acting on Pauli vectors."""

    rows: tuple[_Row, _Row, _Row, _Row]

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(cls, rows) -> "SymplecticMap":
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("a symplectic map needs a 4x4 matrix")
        return cls(rows)

    @classmethod
    def from_text(cls, rows: list[list[str]]) -> "SymplecticMap":
        return cls.from_rows(
            [[LaurentPoly.parse(e) for e in row] for row in rows]
        )

    # -- algebra ----------------------------------------------------------

    def __matmul__(self, other):
        if isinstance(other, SymplecticMap):
            return self.compose(other)
        if isinstance(other, PauliVec):
            return self.apply(other)
        return NotImplemented

    def compose(self, other: "SymplecticMap") -> "SymplecticMap":
        """Matrix product ``self . other`` (apply ``other`` first)."""
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                acc = ZERO
                for k in range(4):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return SymplecticMap(tuple(rows))

    def apply(self, v: PauliVec) -> PauliVec:
        """Apply to a column vector ``(a1, a2, c1, c2)``."""
        comps = (v.a1, v.a2, v.c1, v.c2)
        out = []
        for i in range(4):
            acc = ZERO
            for k in range(4):
                if comps[k]:
                    acc = acc + self.rows[i][k] * comps[k]
            out.append(acc)
        return PauliVec(*out)

    def conj_transpose(self) -> "SymplecticMap":
        return SymplecticMap(
            tuple(
                tuple(self.rows[j][i].conj() for j in range(4)) for i in range(4)
            )
        )

    # -- the defining identities -----------------------------------------

    def _blocks(self):
        r = self.rows
        a = ((r[0][0], r[0][1]), (r[1][0], r[1][1]))
        b = ((r[0][2], r[0][3]), (r[1][2], r[1][3]))
        c = ((r[2][0], r[2][1]), (r[3][0], r[3][1]))
        d = ((r[2][2], r[2][3]), (r[3][2], r[3][3]))
        return a, b, c, d

    def automorphism_report(self) -> dict[str, bool]:
        """Evaluate the three block identities separately (for diagnostics)."""

        def bt(m):  # conjugate transpose of a 2x2 block
            return ((m[0][0].conj(), m[1][0].conj()), (m[0][1].conj(), m[1][1].conj()))

        def mul(m, n):
            return tuple(
                tuple(
                    m[i][0] * n[0][j] + m[i][1] * n[1][j] for j in range(2)
                )
                for i in range(2)
            )

        def add(m, n):
            return tuple(tuple(m[i][j] + n[i][j] for j in range(2)) for i in range(2))

        eye = ((ONE, ZERO), (ZERO, ONE))
        zero = ((ZERO, ZERO), (ZERO, ZERO))
        a, b, c, d = self._blocks()
        return {
            "pairing_identity": add(mul(bt(a), d), mul(bt(c), b)) == eye,
            "x_sector_symmetry": add(mul(bt(a), c), mul(bt(c), a)) == zero,
            "z_sector_symmetry": add(mul(bt(b), d), mul(bt(d), b)) == zero,
        }

    def is_automorphism(self) -> bool:
        """Whether the map preserves the commutation pairing."""
        return all(self.automorphism_report().values())

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[list[list[list[int]]]]:
        return [[e.to_json() for e in row] for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "SymplecticMap":
        return cls.from_rows(
            [[LaurentPoly.from_json(e) for e in row] for row in data]
        )

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[ " + " , ".join(c.ljust(width) for c in row) + " ]" for row in cells
        )


def identity() -> SymplecticMap:
    return SymplecticMap(
        tuple(
            tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4)
        )
    )


# The two off-identity entries of each elementary map, as
# (row, col, monomial) pairs.  Monomial pairs are mutually conjugate
# (shears) or mutually inverse-positioned (transvections), which is what
# makes each map preserve the pairing on its own.
_C_SHEAR_MONOMIALS = {1: ONE, 2: Y, 3: XB, 4: XB * Y}
_B_SHEAR_MONOMIALS = {5: XB * Y, 6: Y, 7: ONE, 8: XB}
_TRANSVECTION_MONOMIALS = {9: ONE, 10: X, 11: YB, 12: X * YB, 13: ONE, 14: XB, 15: Y, 16: XB * Y}


def _elementary_entries(k: int) -> tuple[tuple[int, int, LaurentPoly], ...]:
    if k in (1, 2, 3, 4):  # fill the c block: Z-part response to X input
        m = _C_SHEAR_MONOMIALS[k]
        return ((2, 1, m), (3, 0, m.conj()))
    if k in (5, 6, 7, 8):  # fill the b block: X-part response to Z input
        m = _B_SHEAR_MONOMIALS[k]
        return ((0, 3, m), (1, 2, m.conj()))
    if k in (9, 10, 11, 12):  # lower-triangular a shear, compensated in d
        m = _TRANSVECTION_MONOMIALS[k]
        return ((1, 0, m), (2, 3, m.conj()))
    if k in (13, 14, 15, 16):  # upper-triangular a shear, compensated in d
        m = _TRANSVECTION_MONOMIALS[k]
        return ((0, 1, m), (3, 2, m.conj()))
    raise ValueError(f"elementary index must be 1..{ELEMENTARY_COUNT}, got {k!r}")


@lru_cache(maxsize=None)
def elementary(k: int) -> SymplecticMap:
    """The ``k``-th elementary automorphism (``k`` in 1..16)."""
    rows = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    for i, j, m in _elementary_entries(k):
        rows[i][j] = rows[i][j] + m
    return SymplecticMap.from_rows(rows)


def compose(*maps: SymplecticMap) -> SymplecticMap:
    """Left-to-right matrix product; ``compose(M, N)`` applies ``N`` first."""
    out = identity()
    for m in maps:
        out = out.compose(m)
    return out


def right_multiply(m: SymplecticMap, k: int) -> SymplecticMap:
    """``m . elementary(k)`` via sparse column updates.

    Right-multiplying by ``I + N`` with ``N`` sparse adds, for each entry
    ``N[r][c] = mono``, the update ``col_c += mono * col_r``; elementary
    maps have two such entries, so this costs eight small polynomial
    operations instead of a full matrix product.
    """
    rows = [list(r) for r in m.rows]
    updates = []
    for r, c, mono in _elementary_entries(int(k)):
        updates.append((c, [rows[i][r] * mono for i in range(4)]))
    for c, col in updates:
        for i in range(4):
            rows[i][c] = rows[i][c] + col[i]
    return SymplecticMap.from_rows(rows)


def compose_factors(factors) -> SymplecticMap:
    """Compose elementary maps given by index, left to right.

    ``compose_factors([4, 7])`` is the matrix product ``A4 . A7``.
    """
    out = identity()
    for k in factors:
        out = right_multiply(out, k)
    return out


# -- the name / expression registry ------------------------------------------

_NAMED_FACTORS = {
    "A_d6": (1, 5, 14, 1),
    "A_d7": (1, 11, 5, 14, 9),
}


def map_names() -> tuple[str, ...]:
    """All names accepted by :func:`named_map`, in canonical order."""
    return ("I",) + tuple(f"A{k}" for k in range(1, ELEMENTARY_COUNT + 1)) + tuple(
        sorted(_NAMED_FACTORS)
    )


@lru_cache(maxsize=None)
def named_map(name: str) -> SymplecticMap:
    """Resolve a single map name: ``I``, ``A1`` .. ``A16``, ``A_d6``, ``A_d7``."""
    name = name.strip()
    if name in ("I", "identity", "id"):
        return identity()
    if name in _NAMED_FACTORS:
        return compose_factors(_NAMED_FACTORS[name])
    if name.startswith("A") and name[1:].isdigit():
        return elementary(int(name[1:]))
    raise ValueError(
        f"unknown map name {name!r}; expected one of {', '.join(map_names())}"
    )


def parse_expression(expr: str) -> SymplecticMap:
    """Evaluate a product expression such as ``"A4*A7"``.

    Atoms are map names; ``*`` composes left to right, so ``"A4*A7"`` is
    the matrix product ``A4 . A7`` (``A7`` acts on vectors first).
    """
    atoms = [a for a in (s.strip() for s in expr.split("*")) if a]
    if not atoms:
        raise ValueError("empty map expression")
    return compose(*(named_map(a) for a in atoms))


def expression_factors(expr: str) -> tuple[int, ...]:
    """The elementary indices of an expression, if it is a pure product.

    Named constants expand to their defining factors; the identity
    expands to no factors.  Raises ``ValueError`` for atoms that are not
    products of elementaries.
    """
    factors: list[int] = []
    for atom in (s.strip() for s in expr.split("*")):
        if not atom:
            continue
        if atom in ("I", "identity", "id"):
            continue
        if atom in _NAMED_FACTORS:
            factors.extend(_NAMED_FACTORS[atom])
        elif atom.startswith("A") and atom[1:].isdigit() and 1 <= int(atom[1:]) <= 16:
            factors.append(int(atom[1:]))
        else:
            raise ValueError(f"{atom!r} is not an elementary factor")
    return tuple(factors)


def factors_to_expression(factors) -> str:
    """Inverse of :func:`expression_factors` for plain factor lists."""
    if not factors:
        return "I"
    return "*".join(f"A{int(k)}" for k in factors)
