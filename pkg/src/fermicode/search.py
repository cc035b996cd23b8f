"""Search over products of elementary automorphisms for high-distance codes.

The searchable family is every product of at most five of the sixteen
elementary automorphisms.  Many factor sequences collapse to the same
matrix, so enumeration deduplicates by matrix value and keeps the first
(shortest, then lexicographically least) factor sequence as each
matrix's canonical name.

A cheap upper estimate for a candidate's distance is the minimum raw
weight over its eight hopping-term images — each of those images *is* a
logical operator, so the true distance never exceeds the estimate.
Candidates whose estimate reaches the target are then confirmed with the
exact search of :func:`fermicode.distance.code_distance`, bounded by the
estimate itself.

Long sweeps append one JSON line per confirmed candidate to a ledger
file, and can resume by skipping factor sequences already present.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .automorphisms import SymplecticMap, factors_to_expression, identity, right_multiply
from .codes import CodeFamily, build_code
from .distance import DistanceResult, code_distance

__all__ = ["Candidate", "SearchHit", "enumerate_products", "estimate_distance", "search_codes"]


@dataclass(frozen=True)
class Candidate:
    """A deduplicated product of elementary automorphisms."""

    factors: tuple[int, ...]
    map: SymplecticMap

    @property
    def expr(self) -> str:
        return factors_to_expression(self.factors)

    def build(self, claimed_distance: int | None = None) -> CodeFamily:
        return build_code(self.factors, claimed_distance=claimed_distance)


def _map_digest(m: SymplecticMap) -> bytes:
    """A compact stable fingerprint of a matrix, for dedup sets."""
    payload = ";".join(str(e.to_json()) for row in m.rows for e in row)
    return hashlib.blake2b(payload.encode(), digest_size=16).digest()


def enumerate_products(
    max_len: int,
    include_identity: bool = False,
) -> Iterator[Candidate]:
    """Stream distinct products of 1..max_len elementary maps.

    Candidates come out in canonical order (length ascending, then
    factor sequence lexicographic), each matrix exactly once under its
    first sequence.  The identity (empty product, also hit by inverse
    pairs like ``A1*A1``) is skipped unless requested.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    seen: set[bytes] = {_map_digest(identity())}
    if include_identity:
        yield Candidate((), identity())
    level: list[tuple[tuple[int, ...], SymplecticMap]] = [((), identity())]
    for _ in range(max_len):
        nxt: list[tuple[tuple[int, ...], SymplecticMap]] = []
        for factors, m in level:
            for k in range(1, 17):
                nm = right_multiply(m, k)
                nxt.append((factors + (k,), nm))
                digest = _map_digest(nm)
                if digest in seen:
                    continue
                seen.add(digest)
                yield Candidate(factors + (k,), nm)
        level = nxt


def estimate_distance(code: CodeFamily) -> int:
    """Cheap distance upper bound: lightest raw hopping-term image."""
    return min(vec.weight() for label, vec in code.nn_terms if label != "flux")


@dataclass(frozen=True)
class SearchHit:
    candidate: Candidate
    estimate: int
    result: DistanceResult | None

    @property
    def certified(self) -> int | None:
        """Distance certified (exactly, or as a strict lower bound).

        ``None`` for unconfirmed hits (estimate-only sweeps).
        """
        return None if self.result is None else self.result.distance

    def to_json(self) -> dict:
        return {
            "factors": list(self.candidate.factors),
            "expr": self.candidate.expr,
            "estimate": self.estimate,
            "result": None if self.result is None else self.result.to_json(),
        }


def _ledger_seen(path: Path) -> set[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    if path.exists():
        with path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    doc = json.loads(line)
                    seen.add(tuple(doc["factors"]))
                except (json.JSONDecodeError, KeyError):
                    continue  # ignore torn tail lines from interrupted runs
    return seen


def search_codes(
    target_distance: int,
    max_len: int = 5,
    limit: int | None = None,
    node_cap: int | None = 5_000_000,
    time_cap: float | None = None,
    total_time_cap: float | None = None,
    ledger_path: str | Path | None = None,
    resume: bool = False,
    confirm: bool = True,
    skip_factors: Iterable[tuple[int, ...]] | None = None,
    examined: list[SearchHit] | None = None,
) -> list[SearchHit]:
    """Find candidate codes whose distance is at least ``target_distance``.

    Walks the deduplicated product family, keeps candidates whose weight
    estimate reaches the target, and confirms each by exact search with
    ``max_weight`` equal to the estimate (the estimate is always an upper
    bound, so a completed confirm is exact).  Early-stopping budgets make
    confirms degrade to lower bounds instead of hanging.

    With ``confirm=False`` the exact search is skipped: every candidate
    whose estimate reaches the target is returned with ``result=None``,
    which makes a fast shortlist pass for later confirmation.

    Returns hits whose certified distance (exact value, or proven lower
    bound) reaches the target; with a ledger every examined candidate is
    recorded, hit or miss.  ``skip_factors`` skips specific factor
    sequences (in addition to ledger resume), and a caller-provided
    ``examined`` list receives every examined candidate, hit or miss —
    both exist so a remote caller can keep its own ledger.
    """
    t0 = time.monotonic()
    ledger = Path(ledger_path) if ledger_path is not None else None
    skip = _ledger_seen(ledger) if (ledger is not None and resume) else set()
    if skip_factors is not None:
        skip = skip | {tuple(f) for f in skip_factors}
    hits: list[SearchHit] = []
    for cand in enumerate_products(max_len):
        if total_time_cap is not None and time.monotonic() - t0 > total_time_cap:
            break
        if cand.factors in skip:
            continue
        code = cand.build()
        est = estimate_distance(code)
        if est < target_distance:
            continue
        result = (
            code_distance(code, max_weight=est, node_cap=node_cap, time_cap=time_cap)
            if confirm
            else None
        )
        hit = SearchHit(candidate=cand, estimate=est, result=result)
        if examined is not None:
            examined.append(hit)
        if ledger is not None:
            with ledger.open("a") as fh:
                fh.write(json.dumps(hit.to_json(), separators=(",", ":")) + "\n")
        if result is None or result.distance >= target_distance:
            hits.append(hit)
            if limit is not None and len(hits) >= limit:
                break
    return hits
