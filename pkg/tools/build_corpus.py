"""Regenerate the frozen golden-data corpus under src/fermicode/corpus/data/.

The corpus is a set of JSON records (matrices, transformed operators, weight
tables, syndrome patterns, distance witnesses) that the test suite and the
``corpus-check`` command treat as ground truth.  Re-running this script after
a library change that alters any value will produce different files and a
different MANIFEST, which is exactly the point: the frozen copies act as a
regression gate.

Two operator records additionally carry a ``negative_control``: a variant that
differs from the stored vector by a couple of monomials and fails the
commutation self-check.  Those variants are entered by hand below and are kept
as fixtures proving the checker can reject near-miss data.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from fermicode.automorphisms import (
    compose_factors,
    elementary,
    expression_factors,
    parse_expression,
)
from fermicode.codes import build_code, known_code_names, known_codes
from fermicode.distance import code_distance
from fermicode.pauli import HORIZONTAL, VERTICAL, PauliVec, base_code, dot, single
from fermicode.syndromes import is_logical, syndrome

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "fermicode" / "corpus" / "data"

# Codes with frozen operator-image records (expr -> list of source operators).
IMAGE_SOURCES = {
    "A1": ("hop_h", "hop_v", "flux", "stab"),
    "A4*A7": ("hop_h", "hop_v", "flux", "stab"),
    # The third record for this code is the image of flux+stab (the product of
    # the occupation check with the stabilizer), which is the lighter and more
    # useful representative of that logical coset.
    "A9*A3*A7*A14": ("hop_h", "hop_v", "flux+stab", "stab"),
    "A1*A5*A14*A1": ("hop_h", "hop_v", "flux", "stab"),
    "A1*A11*A5*A14*A9": ("hop_h", "hop_v", "flux", "stab"),
}

# Hand-entered near-miss variants (see module docstring).  Keyed by
# (expr, source); values are the component texts of the bad vector.
NEGATIVE_CONTROLS = {
    ("A4*A7", "flux"): {
        "a1": "1 + x",
        "a2": "1 + y",
        "c1": "x^-1 + x^-1 y^2 + 1 + y",
        "c2": "y^-1 + 1 + x + x^2 y^-1",
        "note": (
            "differs from the stored vector in two monomials of the Z part "
            "and fails the commutation self-check (nonzero symplectic "
            "product with the transformed stabilizer); kept as a negative "
            "fixture for the checker"
        ),
    },
    ("A1*A11*A5*A14*A9", "stab"): {
        "a1": "x^-2 + x^-1 y^-1 + x^-1 + x^-1 y + 1 + y + x y + x y^2",
        "a2": "x^-2 y^-1 + x^-1 y^-2 + x^-1 y^-1 + 1 + y + x y^-1",
        "c1": (
            "x^-2 y^-1 + x^-1 y^-2 + x^-1 y^-1 + 1 + y + x + x y + x y^2 "
            "+ x^2 y^-1 + x^2 y"
        ),
        "c2": "x^-2 + x^-1 y^-1 + x^-1 + x^-1 y + y + y^2 + x + x^2",
        "note": (
            "differs from the stored vector in one monomial of each X "
            "component and fails the commutation self-check (nonzero "
            "symplectic product with itself as transformed stabilizer); "
            "kept as a negative fixture for the checker"
        ),
    },
}

NAMED_PRODUCTS = ("A4*A7", "A9*A3*A7*A14", "A1*A5*A14*A1", "A1*A11*A5*A14*A9")
SYNDROME_CODES = ("I", "A1", "A4*A7", "A9*A3*A7*A14")


def vec_record(vec: PauliVec) -> dict:
    return {"vector": vec.to_json(), "text": str(vec), "weight": vec.weight()}


def resolve_source(name: str) -> PauliVec:
    bc = base_code()
    table = {
        "hop_h": bc.hop_h,
        "hop_v": bc.hop_v,
        "flux": bc.flux,
        "stab": bc.stab,
        "flux+stab": bc.flux + bc.stab,
    }
    return table[name]


def gen_base_code() -> dict:
    bc = base_code()
    return {
        "description": (
            "Reference fermion-encoding code on the square lattice: "
            "horizontal/vertical hopping generators, the occupation (flux) "
            "check, and the stabilizer."
        ),
        "hop_h": vec_record(bc.hop_h),
        "hop_v": vec_record(bc.hop_v),
        "flux": vec_record(bc.flux),
        "stab": vec_record(bc.stab),
    }


def gen_elementaries() -> dict:
    records = []
    for k in range(1, 17):
        m = elementary(k)
        records.append(
            {
                "name": f"A{k}",
                "rows": [[str(p) for p in row] for row in m.rows],
                "matrix": m.to_json(),
            }
        )
    return {
        "description": (
            "The sixteen elementary symplectic generators A1..A16: shears in "
            "the Z and X sectors and mixed-sector transvections, each the "
            "identity plus a conjugate pair of monomial entries."
        ),
        "maps": records,
    }


def gen_named_products() -> dict:
    records = []
    for expr in NAMED_PRODUCTS:
        factors = expression_factors(expr)
        m = compose_factors(factors)
        records.append(
            {
                "expr": expr,
                "factors": list(factors),
                "rows": [[str(p) for p in row] for row in m.rows],
                "matrix": m.to_json(),
            }
        )
    return {
        "description": (
            "Frozen matrices for the composite maps used by the bundled "
            "codes.  'expr' multiplies left to right: the first factor is "
            "applied first."
        ),
        "products": records,
    }


def gen_transformed_vectors() -> dict:
    records = []
    for expr, sources in IMAGE_SOURCES.items():
        m = parse_expression(expr)
        images = []
        for src in sources:
            image = m @ resolve_source(src)
            rec = {"source": src, **vec_record(image)}
            control = NEGATIVE_CONTROLS.get((expr, src))
            if control is not None:
                bad = PauliVec.from_text(
                    control["a1"], control["a2"], control["c1"], control["c2"]
                )
                if bad == image:
                    raise SystemExit(
                        f"negative control for ({expr}, {src}) equals the true vector"
                    )
                stab_image = m @ resolve_source("stab")
                if not dot(stab_image, bad):
                    raise SystemExit(
                        f"negative control for ({expr}, {src}) unexpectedly "
                        "passes the commutation check"
                    )
                rec["negative_control"] = {
                    **vec_record(bad),
                    "note": control["note"],
                }
            images.append(rec)
        records.append(
            {"expr": expr, "factors": list(expression_factors(expr)), "images": images}
        )
    return {
        "description": (
            "Images of the reference generators under the bundled maps.  "
            "Entries with a negative_control carry a near-miss variant that "
            "fails the commutation self-check; see corpus.selfcheck."
        ),
        "codes": records,
    }


def gen_weight_table() -> dict:
    tiers = {expr: tier for expr, _, tier in known_code_names()}
    rows = []
    for code in known_codes():
        stats = code.weight_stats()
        rows.append(
            {
                "expr": code.expr,
                "factors": list(code.factors),
                "distance": code.claimed_distance,
                "tier": tiers[code.expr],
                "hopping": [stats.hopping_min, stats.hopping_max],
                "occupation": stats.occupation,
                "stabilizer": stats.stabilizer,
                "stats": stats.to_json(),
            }
        )
    return {
        "description": (
            "Summary table for the bundled codes: code distance, "
            "stabilizer-reduced hopping weight range, reduced occupation "
            "weight, and raw stabilizer weight."
        ),
        "rows": rows,
    }


def gen_syndrome_patterns() -> dict:
    records = []
    for expr in SYNDROME_CODES:
        code = build_code(expr)
        pats = {}
        for orient, oname in ((HORIZONTAL, "h"), (VERTICAL, "v")):
            for letter in "XYZ":
                pats[f"{oname}:{letter}"] = [
                    list(t) for t in syndrome(code, single(orient, letter))
                ]
        records.append({"expr": expr, "patterns": pats})
    return {
        "description": (
            "Syndrome supports of single-edge Pauli errors at the origin.  "
            "Keys are '<orientation>:<letter>' with orientation h "
            "(horizontal edge) or v (vertical edge); values list the lattice "
            "translates of the stabilizer that anticommute with the error."
        ),
        "codes": records,
    }


def find_z_only_witness(code, weight: int) -> PauliVec:
    """Smallest all-Z logical of the given weight (exhaustive over a patch)."""
    from itertools import combinations

    edges = [
        (o, i, j) for i in range(-2, 3) for j in range(-2, 3) for o in (0, 1)
    ]
    syn = {
        e: frozenset(dot(code.stab, single(e[0], "Z", e[1], e[2])).support)
        for e in edges
    }
    best = None
    for combo in combinations(edges, weight):
        acc = frozenset()
        for e in combo:
            acc = acc ^ syn[e]
        if acc:
            continue
        vec = PauliVec()
        for o, i, j in combo:
            vec = vec + single(o, "Z", i, j)
        if is_logical(code, vec):
            key = tuple(vec.edges())
            if best is None or key < tuple(best.edges()):
                best = vec
    if best is None:
        raise SystemExit("no all-Z witness found")
    return best


def gen_witnesses() -> dict:
    records = []
    for code in known_codes():
        result = code_distance(code, max_weight=code.claimed_distance)
        if result.kind != "exact" or result.distance != code.claimed_distance:
            raise SystemExit(f"distance mismatch for {code.expr}: {result.to_json()}")
        records.append(
            {
                "expr": code.expr,
                "distance": result.distance,
                "witness": {**vec_record(result.witness)},
            }
        )
    special_code = build_code("A4*A7")
    zvec = find_z_only_witness(special_code, 4)
    return {
        "description": (
            "Minimal-weight logical operators certifying each bundled "
            "code's distance, plus an all-Z weight-4 logical for the "
            "distance-4 code A4*A7."
        ),
        "minimal": records,
        "z_only_weight4": {"expr": "A4*A7", **vec_record(zvec)},
    }


GENERATORS = {
    "base_code.json": gen_base_code,
    "elementaries.json": gen_elementaries,
    "named_products.json": gen_named_products,
    "transformed_vectors.json": gen_transformed_vectors,
    "weight_table.json": gen_weight_table,
    "syndrome_patterns.json": gen_syndrome_patterns,
    "witnesses.json": gen_witnesses,
}


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, gen in GENERATORS.items():
        doc = gen()
        blob = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        (DATA_DIR / name).write_text(blob)
        manifest[name] = hashlib.sha256(blob.encode()).hexdigest()
        print(f"wrote {name} ({len(blob)} bytes)")
    blob = json.dumps({"files": manifest}, indent=2, sort_keys=True) + "\n"
    (DATA_DIR / "MANIFEST.json").write_text(blob)
    print("wrote MANIFEST.json")


if __name__ == "__main__":
    main()
