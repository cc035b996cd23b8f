"""Frozen golden-data corpus and its self-check.

The ``data/`` directory bundles JSON records that the rest of the package
treats as ground truth:

* ``base_code.json``          – the reference generators and stabilizer
* ``elementaries.json``       – the sixteen elementary symplectic maps
* ``named_products.json``     – matrices of the bundled composite maps
* ``transformed_vectors.json``– operator images under those maps
* ``weight_table.json``       – distance / weight summary for the bundled codes
* ``syndrome_patterns.json``  – single-error syndromes for selected codes
* ``witnesses.json``          – minimal logical operators certifying distances
* ``MANIFEST.json``           – sha256 of every other file

:func:`selfcheck` verifies three layers: the manifest hashes (bytes have not
drifted), internal mathematical consistency (commutation identities, weights),
and agreement with fresh recomputation by this library.  Two operator records
carry a ``negative_control`` variant that must *fail* the commutation check;
this proves the checker distinguishes near-miss data from the real thing.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources

from ..automorphisms import SymplecticMap, compose_factors, expression_factors
from ..codes import build_code, known_code_names, known_codes
from ..distance import code_distance
from ..laurent import LaurentPoly
from ..pauli import HORIZONTAL, VERTICAL, PauliVec, base_code, dot, single
from ..syndromes import commutes_with_stabilizers, is_logical, syndrome

DATA_FILES = (
    "base_code.json",
    "elementaries.json",
    "named_products.json",
    "transformed_vectors.json",
    "weight_table.json",
    "syndrome_patterns.json",
    "witnesses.json",
)


def _data_root():
    return resources.files(__name__) / "data"


def raw_bytes(name: str) -> bytes:
    """Raw bytes of a corpus file."""
    return (_data_root() / name).read_bytes()


def load(name: str) -> dict:
    """Parsed JSON document for a corpus file."""
    return json.loads(raw_bytes(name))


def sha256_of(name: str) -> str:
    return hashlib.sha256(raw_bytes(name)).hexdigest()


def manifest() -> dict[str, str]:
    """Mapping of data file name to its expected sha256."""
    return load("MANIFEST.json")["files"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _vec(doc: dict) -> PauliVec:
    return PauliVec.from_json(doc)


def _check_manifest() -> CheckResult:
    try:
        expected = manifest()
    except FileNotFoundError:
        return CheckResult("manifest", False, "MANIFEST.json missing")
    problems = []
    if set(expected) != set(DATA_FILES):
        problems.append(
            f"manifest lists {sorted(expected)} but corpus defines {sorted(DATA_FILES)}"
        )
    for name in sorted(set(expected) & set(DATA_FILES)):
        actual = sha256_of(name)
        if actual != expected[name]:
            problems.append(f"{name}: sha256 {actual} != manifest {expected[name]}")
    if problems:
        return CheckResult("manifest", False, "; ".join(problems))
    return CheckResult("manifest", True, f"{len(expected)} files hashed and matching")


def _check_base_code() -> CheckResult:
    doc = load("base_code.json")
    bc = base_code()
    problems = []
    for key, ref in (
        ("hop_h", bc.hop_h),
        ("hop_v", bc.hop_v),
        ("flux", bc.flux),
        ("stab", bc.stab),
    ):
        rec = doc[key]
        vec = _vec(rec["vector"])
        if vec != ref:
            problems.append(f"{key}: stored vector differs from library definition")
        if rec["text"] != str(ref):
            problems.append(f"{key}: stored text differs from canonical rendering")
        if rec["weight"] != ref.weight():
            problems.append(f"{key}: stored weight {rec['weight']} != {ref.weight()}")
    for key, vec in (("hop_h", bc.hop_h), ("hop_v", bc.hop_v), ("flux", bc.flux)):
        if dot(bc.stab, vec):
            problems.append(f"{key} does not commute with the stabilizer")
    if dot(bc.stab, bc.stab):
        problems.append("stabilizer does not commute with its own translates")
    if not dot(bc.hop_h, bc.flux):
        problems.append("hop_h unexpectedly commutes with all flux translates")
    if problems:
        return CheckResult("base-code", False, "; ".join(problems))
    return CheckResult("base-code", True, "definitions and commutation identities hold")


def _check_elementaries() -> CheckResult:
    from ..automorphisms import elementary

    doc = load("elementaries.json")
    problems = []
    if len(doc["maps"]) != 16:
        problems.append(f"expected 16 maps, found {len(doc['maps'])}")
    for rec in doc["maps"]:
        k = int(rec["name"][1:])
        stored = SymplecticMap.from_json(rec["matrix"])
        if stored != elementary(k):
            problems.append(f"{rec['name']}: stored matrix differs from generator")
        from_text = SymplecticMap.from_text(rec["rows"])
        if from_text != stored:
            problems.append(f"{rec['name']}: text rows disagree with JSON matrix")
        report = stored.automorphism_report()
        bad = [key for key, ok in report.items() if not ok]
        if bad:
            problems.append(f"{rec['name']}: identity check failed: {bad}")
    if problems:
        return CheckResult("elementaries", False, "; ".join(problems))
    return CheckResult("elementaries", True, "16 maps match generators and identities")


def _check_named_products() -> CheckResult:
    doc = load("named_products.json")
    problems = []
    for rec in doc["products"]:
        factors = tuple(rec["factors"])
        if expression_factors(rec["expr"]) != factors:
            problems.append(f"{rec['expr']}: factors field disagrees with expr")
        stored = SymplecticMap.from_json(rec["matrix"])
        if stored != compose_factors(factors):
            problems.append(f"{rec['expr']}: stored matrix differs from composition")
        if SymplecticMap.from_text(rec["rows"]) != stored:
            problems.append(f"{rec['expr']}: text rows disagree with JSON matrix")
        if not stored.is_automorphism():
            problems.append(f"{rec['expr']}: matrix fails the symplectic identities")
    if problems:
        return CheckResult("named-products", False, "; ".join(problems))
    n = len(doc["products"])
    return CheckResult("named-products", True, f"{n} composite matrices verified")


def _resolve_source(name: str) -> PauliVec:
    bc = base_code()
    return {
        "hop_h": bc.hop_h,
        "hop_v": bc.hop_v,
        "flux": bc.flux,
        "stab": bc.stab,
        "flux+stab": bc.flux + bc.stab,
    }[name]


def _check_transformed_vectors() -> CheckResult:
    doc = load("transformed_vectors.json")
    problems = []
    controls = 0
    for rec in doc["codes"]:
        expr = rec["expr"]
        m = compose_factors(tuple(rec["factors"]))
        stab_image = m @ _resolve_source("stab")
        for im in rec["images"]:
            label = f"{expr}[{im['source']}]"
            vec = _vec(im["vector"])
            expected = m @ _resolve_source(im["source"])
            if vec != expected:
                problems.append(f"{label}: stored vector differs from recomputation")
            if im["weight"] != vec.weight():
                problems.append(f"{label}: stored weight {im['weight']} wrong")
            if im["text"] != str(vec):
                problems.append(f"{label}: stored text not canonical")
            if dot(stab_image, vec):
                problems.append(f"{label}: fails commutation with transformed stabilizer")
            control = im.get("negative_control")
            if control is not None:
                controls += 1
                bad = _vec(control["vector"])
                if bad == vec:
                    problems.append(f"{label}: negative control equals the true vector")
                if not dot(stab_image, bad):
                    problems.append(
                        f"{label}: negative control passes the commutation check"
                    )
                if control["weight"] != bad.weight():
                    problems.append(f"{label}: negative control weight wrong")
    if problems:
        return CheckResult("transformed-vectors", False, "; ".join(problems))
    n = sum(len(rec["images"]) for rec in doc["codes"])
    return CheckResult(
        "transformed-vectors",
        True,
        f"{n} images verified; {controls} negative controls correctly rejected",
    )


def _check_weight_table() -> CheckResult:
    doc = load("weight_table.json")
    tiers = {expr: tier for expr, _, tier in known_code_names()}
    problems = []
    seen = set()
    for row in doc["rows"]:
        expr = row["expr"]
        seen.add(expr)
        code = build_code(tuple(row["factors"]))
        if code.expr != expr:
            problems.append(f"{expr}: factors field disagrees with expr")
        if row["distance"] != code.claimed_distance:
            problems.append(f"{expr}: distance {row['distance']} not the claimed value")
        if row["tier"] != tiers.get(expr):
            problems.append(f"{expr}: tier {row['tier']} not the registered value")
        stats = code.weight_stats()
        if row["hopping"] != [stats.hopping_min, stats.hopping_max]:
            problems.append(f"{expr}: hopping range differs from recomputation")
        if row["occupation"] != stats.occupation:
            problems.append(f"{expr}: occupation weight differs from recomputation")
        if row["stabilizer"] != stats.stabilizer:
            problems.append(f"{expr}: stabilizer weight differs from recomputation")
        if row["stats"] != stats.to_json():
            problems.append(f"{expr}: detailed stats differ from recomputation")
    missing = {expr for expr, _, _ in known_code_names()} - seen
    if missing:
        problems.append(f"rows missing for {sorted(missing)}")
    if problems:
        return CheckResult("weight-table", False, "; ".join(problems))
    return CheckResult("weight-table", True, f"{len(doc['rows'])} rows recomputed")


def _check_syndrome_patterns() -> CheckResult:
    doc = load("syndrome_patterns.json")
    problems = []
    for rec in doc["codes"]:
        code = build_code(rec["expr"])
        for key, stored in rec["patterns"].items():
            oname, letter = key.split(":")
            orient = HORIZONTAL if oname == "h" else VERTICAL
            fresh = [list(t) for t in syndrome(code, single(orient, letter))]
            if fresh != stored:
                problems.append(f"{rec['expr']}[{key}]: stored pattern differs")
    if problems:
        return CheckResult("syndrome-patterns", False, "; ".join(problems))
    n = sum(len(rec["patterns"]) for rec in doc["codes"])
    return CheckResult("syndrome-patterns", True, f"{n} patterns recomputed")


def _check_witnesses(recertify: bool = False) -> CheckResult:
    doc = load("witnesses.json")
    problems = []
    by_expr = {}
    for rec in doc["minimal"]:
        expr = rec["expr"]
        by_expr[expr] = rec
        code = build_code(expr)
        vec = _vec(rec["witness"]["vector"])
        if rec["distance"] != code.claimed_distance:
            problems.append(f"{expr}: stored distance is not the claimed value")
        if rec["witness"]["weight"] != vec.weight():
            problems.append(f"{expr}: stored witness weight wrong")
        if vec.weight() != rec["distance"]:
            problems.append(f"{expr}: witness weight differs from distance")
        if not commutes_with_stabilizers(code, vec):
            problems.append(f"{expr}: witness has nonzero syndrome")
        elif not is_logical(code, vec):
            problems.append(f"{expr}: witness is in the stabilizer group")
        if recertify:
            result = code_distance(code, max_weight=rec["distance"])
            if result.kind != "exact" or result.distance != rec["distance"]:
                problems.append(f"{expr}: recertification gave {result.kind}")
    missing = {expr for expr, _, _ in known_code_names()} - set(by_expr)
    if missing:
        problems.append(f"witnesses missing for {sorted(missing)}")
    z = doc["z_only_weight4"]
    zvec = _vec(z["vector"])
    zcode = build_code(z["expr"])
    if zvec.a1 or zvec.a2:
        problems.append("z_only_weight4: has a nonzero X part")
    if zvec.weight() != 4 or z["weight"] != 4:
        problems.append("z_only_weight4: weight is not 4")
    if not commutes_with_stabilizers(zcode, zvec):
        problems.append("z_only_weight4: nonzero syndrome")
    elif not is_logical(zcode, zvec):
        problems.append("z_only_weight4: lies in the stabilizer group")
    if problems:
        return CheckResult("witnesses", False, "; ".join(problems))
    return CheckResult(
        "witnesses", True, f"{len(doc['minimal'])} minimal witnesses + all-Z record hold"
    )


def selfcheck(recertify_distances: bool = False) -> dict:
    """Run every corpus check and return a structured report.

    With ``recertify_distances`` the minimal-witness check also re-runs the
    exact distance search for each bundled code (a few seconds of work);
    otherwise the stored witnesses are only validated as logical operators of
    the stated weight.
    """
    checks = [
        _check_manifest(),
        _check_base_code(),
        _check_elementaries(),
        _check_named_products(),
        _check_transformed_vectors(),
        _check_weight_table(),
        _check_syndrome_patterns(),
        _check_witnesses(recertify=recertify_distances),
    ]
    return {"ok": all(c.ok for c in checks), "checks": [c.to_json() for c in checks]}


def main(argv: list[str] | None = None) -> int:
    """Command-line entry point: print one line per check, exit 1 on failure."""
    import argparse

    parser = argparse.ArgumentParser(
        prog="fermicode-corpus-check", description="Verify the bundled data corpus."
    )
    parser.add_argument(
        "--recertify-distances",
        action="store_true",
        help="also re-run the exact distance search for each bundled code",
    )
    args = parser.parse_args(argv)
    report = selfcheck(recertify_distances=args.recertify_distances)
    for check in report["checks"]:
        status = "ok " if check["ok"] else "FAIL"
        print(f"[{status}] {check['name']}: {check['detail']}")
    print("corpus:", "ok" if report["ok"] else "FAILED")
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
