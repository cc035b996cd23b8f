"""Translation-invariant fermion-to-qubit stabilizer codes on the square lattice.

The package models Pauli operators on an infinite square lattice with one
qubit per edge as length-4 vectors over the Laurent polynomial ring
F2[x, y, x^-1, y^-1], builds fermion-encoding codes by acting on a reference
code with symplectic automorphisms of that module, certifies code distances
with an exact syndrome-cancellation search, screens automorphism products for
high-distance codes, and verifies error correction exhaustively on finite
tori.

Quick start::

    from fermicode import build_code, code_distance

    code = build_code("A4*A7")           # distance-4 code
    result = code_distance(code, max_weight=4)
    assert result.kind == "exact" and result.distance == 4
"""

from .laurent import LaurentPoly
from .pauli import PauliVec, base_code, dot, single
from .automorphisms import (
    SymplecticMap,
    compose_factors,
    elementary,
    map_names,
    named_map,
    parse_expression,
)
from .codes import CodeFamily, build_code, known_code_names, known_codes
from .syndromes import commutes_with_stabilizers, in_stabilizer_group, is_logical, syndrome
from .distance import DistanceResult, brute_force_distance, code_distance, verify_distance_claims
from .search import Candidate, SearchHit, enumerate_products, estimate_distance, search_codes
from .torus import TorusCode, correct_all_errors, detect_up_to, materialize
from .render import render_ascii, render_svg

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "PauliVec",
    "base_code",
    "dot",
    "single",
    "SymplecticMap",
    "compose_factors",
    "elementary",
    "map_names",
    "named_map",
    "parse_expression",
    "CodeFamily",
    "build_code",
    "known_code_names",
    "known_codes",
    "commutes_with_stabilizers",
    "in_stabilizer_group",
    "is_logical",
    "syndrome",
    "DistanceResult",
    "brute_force_distance",
    "code_distance",
    "verify_distance_claims",
    "Candidate",
    "SearchHit",
    "enumerate_products",
    "estimate_distance",
    "search_codes",
    "TorusCode",
    "correct_all_errors",
    "detect_up_to",
    "materialize",
    "render_ascii",
    "render_svg",
    "__version__",
]
