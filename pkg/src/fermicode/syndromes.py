"""Syndromes and logical membership for translation-invariant codes.

The stabilizer group of a :class:`~fermicode.codes.CodeFamily` is
generated by all lattice translates of its vertex operator.  An error
operator ``E`` violates the stabilizer at vertex ``(m, n)`` exactly when
the translate of the vertex operator to ``(m, n)`` anticommutes with
``E``; by the offset convention of :func:`fermicode.pauli.dot` those
positions are precisely the support of ``dot(stab, E)``, so a syndrome
is just a polynomial support read off in vertex coordinates.

Membership in the stabilizer group itself is decided by commutation with
the code's commutant generators: an operator lies in the span of
stabilizer translates iff it commutes with every translate of the vertex
operator *and* of the three logical generators (both hoppings and the
face parity).
"""

from __future__ import annotations

from .codes import CodeFamily
from .pauli import PauliVec, dot

__all__ = [
    "syndrome",
    "commutes_with_stabilizers",
    "in_stabilizer_group",
    "is_logical",
]


def syndrome(code: CodeFamily, error: PauliVec) -> tuple[tuple[int, int], ...]:
    """Violated stabilizer positions, sorted in canonical (x, y) order."""
    return dot(code.stab, error).terms()


def commutes_with_stabilizers(code: CodeFamily, error: PauliVec) -> bool:
    """Whether ``error`` commutes with every translate of the vertex operator."""
    return not dot(code.stab, error)


def in_stabilizer_group(code: CodeFamily, op: PauliVec) -> bool:
    """Whether ``op`` is a product of stabilizer translates.

    Requires ``op`` to commute with all stabilizers (otherwise membership
    is not even well-posed, and a ``ValueError`` is raised).
    """
    if dot(code.stab, op):
        raise ValueError("operator violates stabilizers; not in the commutant")
    return not (
        dot(code.flux, op) or dot(code.hop_h, op) or dot(code.hop_v, op)
    )


def is_logical(code: CodeFamily, op: PauliVec) -> bool:
    """Whether ``op`` preserves the code space but acts nontrivially on it."""
    if op.is_zero() or dot(code.stab, op):
        return False
    return not in_stabilizer_group(code, op)
