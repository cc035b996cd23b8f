"""Finite instantiations of a code on an L-by-L periodic lattice.

Everything upstream treats operators as translation-finite objects on
the infinite lattice; this module wraps them onto a torus, turning a
:class:`~fermicode.codes.CodeFamily` into a concrete binary-symplectic
stabilizer code whose claims can be checked by exhaustive decoding.

Layout: the torus has ``L*L`` vertices and ``n = 2*L*L`` edge qubits,
with the edge of orientation ``o`` (0 horizontal, 1 vertical) based at
vertex ``(x, y)`` stored as qubit ``2*(x + L*y) + o``.  A Pauli operator
is a ``2n``-bit integer: X-part in bits ``[0, n)``, Z-part in bits
``[n, 2n)``.

Wrap-around can alias a long operator into a short one, so materializing
demands ``L >= max(4, 2*d)`` for the claimed distance ``d``; under that
margin a zero-syndrome operator of weight below ``d`` cannot be a
wrapped artifact of anything legitimate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product

from .codes import CodeFamily
from .pauli import PauliVec

__all__ = ["TorusCode", "materialize", "correct_all_errors", "detect_up_to"]

_LETTERS = ("X", "Y", "Z")


def _vec_to_mask(vec: PauliVec, L: int) -> int:
    """Wrap an infinite-lattice operator onto the torus bit layout.

    Support points that collide after wrapping cancel in pairs, which is
    the correct mod-2 behavior.
    """
    n = 2 * L * L
    mask = 0
    for poly, orient, zpart in (
        (vec.a1, 0, False),
        (vec.a2, 1, False),
        (vec.c1, 0, True),
        (vec.c2, 1, True),
    ):
        for i, j in poly.support:
            q = 2 * ((i % L) + L * (j % L)) + orient
            mask ^= 1 << (q + n if zpart else q)
    return mask


class TorusCode:
    """A code family wrapped onto a fixed torus (see module docstring)."""

    def __init__(self, code: CodeFamily, L: int) -> None:
        self.code = code
        self.L = L
        self.n = 2 * L * L
        self.rows: tuple[int, ...] = tuple(
            _vec_to_mask(code.stab.translate(m, nn), L)
            for nn in range(L)
            for m in range(L)
        )
        self.logical_masks: dict[str, int] = {
            "hop_h": _vec_to_mask(code.hop_h, L),
            "hop_v": _vec_to_mask(code.hop_v, L),
            "flux": _vec_to_mask(code.flux, L),
        }
        self._basis: dict[int, int] = {}
        for r in self.rows:
            r = self._reduce(r)
            if r:
                self._basis[r.bit_length() - 1] = r
        self.rank = len(self._basis)
        # Per-(qubit, letter) syndromes, so any error's syndrome is an XOR.
        self._single_syndromes: list[tuple[int, int, int]] = []
        for q in range(self.n):
            sx = sz = 0
            for v, row in enumerate(self.rows):
                if (row >> (self.n + q)) & 1:  # row has Z here: flips X errors
                    sx |= 1 << v
                if (row >> q) & 1:  # row has X here: flips Z errors
                    sz |= 1 << v
            self._single_syndromes.append((sx, sz, sx ^ sz))

    # -- membership ------------------------------------------------------

    def _reduce(self, mask: int) -> int:
        basis = self._basis
        while mask:
            p = mask.bit_length() - 1
            row = basis.get(p)
            if row is None:
                return mask
            mask ^= row
        return 0

    def in_stabilizer_row_space(self, mask: int) -> bool:
        return self._reduce(mask) == 0

    # -- single-error syndrome table --------------------------------------

    def single_syndrome(self, q: int, letter: str) -> int:
        sx, sz, sy = self._single_syndromes[q]
        return sx if letter == "X" else sz if letter == "Z" else sy

    def error_syndrome(self, err: tuple[tuple[int, str], ...]) -> int:
        syn = 0
        for q, letter in err:
            syn ^= self.single_syndrome(q, letter)
        return syn

    def error_mask(self, err: tuple[tuple[int, str], ...]) -> int:
        mask = 0
        for q, letter in err:
            if letter in ("X", "Y"):
                mask ^= 1 << q
            if letter in ("Z", "Y"):
                mask ^= 1 << (q + self.n)
        return mask

    def mask_weight(self, mask: int) -> int:
        return ((mask >> self.n) | (mask & ((1 << self.n) - 1))).bit_count()

    def mask_to_edges(self, mask: int) -> list[list]:
        """Decode a mask to ``[x, y, orientation, letter]`` entries."""
        out = []
        for q in range(self.n):
            has_x = (mask >> q) & 1
            has_z = (mask >> (q + self.n)) & 1
            if not (has_x or has_z):
                continue
            letter = "Y" if (has_x and has_z) else ("X" if has_x else "Z")
            x, y, orient = (q // 2) % self.L, (q // 2) // self.L, q % 2
            out.append([x, y, orient, letter])
        return out

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        def row_doc(mask: int) -> dict:
            return {
                "x": [q for q in range(self.n) if (mask >> q) & 1],
                "z": [q for q in range(self.n) if (mask >> (q + self.n)) & 1],
            }

        return {
            "expr": self.code.expr,
            "L": self.L,
            "qubits": self.n,
            "qubit_index": "2*(x + L*y) + orientation, orientation 0 horizontal / 1 vertical",
            "stabilizer_rank": self.rank,
            "stabilizer_rows": [row_doc(r) for r in self.rows],
            "logicals": {k: row_doc(v) for k, v in self.logical_masks.items()},
        }


def materialize(code: CodeFamily, L: int, claimed_distance: int | None = None) -> TorusCode:
    """Wrap ``code`` onto the ``L x L`` torus, enforcing the safety margin."""
    d = claimed_distance if claimed_distance is not None else code.claimed_distance
    need = max(4, 2 * d) if d else 4
    if L < need:
        raise ValueError(
            f"L={L} is too small: need L >= {need} to rule out wrap-around "
            f"artifacts at claimed distance {d}"
        )
    return TorusCode(code, L)


def _errors_up_to(tc: TorusCode, t: int):
    """All torus errors of weight 1..t as ((qubit, letter), ...), in order."""
    for w in range(1, t + 1):
        for qs in combinations(range(tc.n), w):
            for letters in product(_LETTERS, repeat=w):
                yield tuple(zip(qs, letters))


def correct_all_errors(tc: TorusCode, t: int, max_failures: int = 10) -> dict:
    """Exhaustively check that weight<=t errors are correctable.

    A minimum-weight syndrome-table decoder succeeds on every error of
    weight at most ``t`` iff any two such errors with equal syndrome
    differ by a stabilizer.  This scans all of them, records the first
    representative per syndrome, and reports every inequivalent
    collision (up to ``max_failures`` witnesses).
    """
    t0 = time.monotonic()
    table: dict[int, int] = {}
    checked = 0
    failures: list[dict] = []
    for err in _errors_up_to(tc, t):
        checked += 1
        syn = tc.error_syndrome(err)
        mask = tc.error_mask(err)
        prev = table.get(syn)
        if prev is None:
            table[syn] = mask
            continue
        if prev == mask:
            continue  # same operator reached twice (Y = X then Z on one edge)
        if not tc.in_stabilizer_row_space(prev ^ mask):
            if len(failures) < max_failures:
                failures.append(
                    {
                        "error_a": tc.mask_to_edges(prev),
                        "error_b": tc.mask_to_edges(mask),
                        "syndrome_bits": syn.bit_count(),
                    }
                )
    return {
        "expr": tc.code.expr,
        "L": tc.L,
        "t": t,
        "errors_checked": checked,
        "distinct_syndromes": len(table),
        "correctable": not failures,
        "failures": failures,
        "seconds": round(time.monotonic() - t0, 3),
    }


def detect_up_to(tc: TorusCode, w: int) -> dict:
    """Check that every weight<=w error is detectable (or trivial).

    An error evades detection iff it has zero syndrome yet lies outside
    the stabilizer row space.  Splitting a weight-w operator into two
    halves of weight <= ceil(w/2) with equal syndromes lets a meet-in-
    the-middle scan cover all cases without enumerating weight-w
    operators directly.
    """
    t0 = time.monotonic()
    half = (w + 1) // 2
    buckets: dict[int, list[tuple[int, int]]] = {}
    # weight-0 identity makes single low-weight zero-syndrome ops pairable
    buckets[0] = [(0, 0)]
    count = 0
    for err in _errors_up_to(tc, half):
        count += 1
        syn = tc.error_syndrome(err)
        buckets.setdefault(syn, []).append((tc.error_mask(err), len(err)))
    witness = None
    for syn, entries in buckets.items():
        for (m1, w1), (m2, w2) in combinations(entries, 2):
            if w1 + w2 > w:
                continue
            mask = m1 ^ m2
            if mask and not tc.in_stabilizer_row_space(mask):
                witness = mask
                break
        if witness is not None:
            break
    return {
        "expr": tc.code.expr,
        "L": tc.L,
        "w": w,
        "half_errors_enumerated": count,
        "detectable": witness is None,
        "undetected_error": tc.mask_to_edges(witness) if witness is not None else None,
        "undetected_weight": tc.mask_weight(witness) if witness is not None else None,
        "seconds": round(time.monotonic() - t0, 3),
    }
