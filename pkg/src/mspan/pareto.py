"""Exact non-dominated set enumeration and the generic dominance filter.

Enumeration includes every edge with ``c1 <= 0`` unconditionally: adding such
an edge never raises the stretch and never raises the cost, so every
non-dominated point keeps a representative spanner of this form.  Only the
remaining "free" edges (``c1 > 0``) are enumerated, capped by a budget.

Subsets are visited in ascending bitmask order and the first spanner found
per value vector is kept as its witness.  When the work is split across
worker processes, partial fronts merge by keeping the smallest-bitmask
witness, so the result does not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import BudgetExceededError
from .graphs import (
    UnionFind,
    WeightedGraph,
    _full_reach_counts,
    _reachable_from,
    instance_from_dict,
    instance_to_dict,
    require_valid,
)
from .objectives import ValueVector, _stretch

DEFAULT_BUDGET = 26

# Minimum number of subsets before enumeration is split across processes.
_POOL_MIN_MASKS = 1 << 12


@dataclass(frozen=True)
class ParetoFront:
    """Non-dominated value vectors sorted by ascending ``f1``.

    ``witnesses`` optionally maps each point to one spanner edge-id set.
    """

    points: tuple[ValueVector, ...]
    witnesses: Optional[dict[ValueVector, frozenset[int]]] = None

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        for a, b in zip(pts, pts[1:]):
            if not (a.f1 < b.f1 and a.f2 > b.f2):
                raise ValueError(f"not a strictly decreasing staircase: {a} before {b}")
        if self.witnesses is not None and set(self.witnesses) != set(pts):
            raise ValueError("witness keys do not match front points")

    def point_set(self) -> frozenset[ValueVector]:
        return frozenset(self.points)


def nondominated_filter(points: Iterable[ValueVector]) -> ParetoFront:
    """Distinct points not dominated by any other; duplicates collapse."""
    ordered = sorted(set(points), key=ValueVector.key)
    kept: list[ValueVector] = []
    best_f2: Optional[Fraction] = None
    for p in ordered:
        if best_f2 is None or p.f2 < best_f2:
            kept.append(p)
            best_f2 = p.f2
    return ParetoFront(tuple(kept))


def _split_free_edges(g: WeightedGraph, budget: int) -> tuple[list[int], list[int]]:
    require_valid(g)
    free = [eid for eid, e in enumerate(g.edges) if e.c1 > 0]
    if len(free) > budget:
        raise BudgetExceededError(
            f"{len(free)} edges with c1 > 0 exceed the enumeration budget of {budget}"
        )
    base = [eid for eid, e in enumerate(g.edges) if e.c1 <= 0]
    return free, base


def _feasibility_check(g: WeightedGraph, base_ids: list[int]) -> Callable[[frozenset[int], list[int]], bool]:
    """Feasibility test for ``base + chosen`` subsets, specialised per graph kind."""
    if not g.directed:
        base_uf = UnionFind(g.vertex_count)
        for eid in base_ids:
            e = g.edges[eid]
            base_uf.union(e.u, e.v)
        edges = g.edges

        def undirected(ids: frozenset[int], chosen: list[int]) -> bool:
            uf = base_uf.clone()
            for eid in chosen:
                e = edges[eid]
                uf.union(e.u, e.v)
            return uf.components == 1

        return undirected

    targets = _full_reach_counts(g)

    def directed(ids: frozenset[int], chosen: list[int]) -> bool:
        for src in range(g.vertex_count):
            if len(_reachable_from(g, ids, src)) != targets[src]:
                return False
        return True

    return directed


def _scan_front_range(
    g: WeightedGraph, free: list[int], base_ids: list[int], lo: int, hi: int
) -> dict[ValueVector, tuple[int, frozenset[int]]]:
    """Value vectors of feasible subsets with masks in ``[lo, hi)``.

    Keeps the smallest mask (and its edge set) per value vector.
    """
    feasible = _feasibility_check(g, base_ids)
    edges = g.edges
    base = frozenset(base_ids)
    base_f1 = sum(edges[eid].c1 for eid in base_ids)
    nfree = len(free)
    best: dict[ValueVector, tuple[int, frozenset[int]]] = {}
    for mask in range(lo, hi):
        chosen = [free[j] for j in range(nfree) if mask >> j & 1]
        ids = base.union(chosen)
        if not feasible(ids, chosen):
            continue
        f1 = base_f1 + sum(edges[eid].c1 for eid in chosen)
        vv = ValueVector(f1, _stretch(g, ids, "edge-restricted"))
        if vv not in best:
            best[vv] = (mask, ids)
    return best


def _scan_wsum_range(
    g: WeightedGraph,
    free: list[int],
    base_ids: list[int],
    lam: tuple[Fraction, Fraction],
    lo: int,
    hi: int,
) -> Optional[tuple[Fraction, ValueVector, int, frozenset[int]]]:
    """Minimum of ``lam . f`` over feasible subsets with masks in ``[lo, hi)``.

    Ties break on lexicographically smallest ``(f1, f2)``, then smallest mask.
    """
    feasible = _feasibility_check(g, base_ids)
    edges = g.edges
    base = frozenset(base_ids)
    base_f1 = sum(edges[eid].c1 for eid in base_ids)
    nfree = len(free)
    l1, l2 = lam
    best: Optional[tuple[Fraction, ValueVector, int, frozenset[int]]] = None
    for mask in range(lo, hi):
        chosen = [free[j] for j in range(nfree) if mask >> j & 1]
        ids = base.union(chosen)
        if not feasible(ids, chosen):
            continue
        f1 = base_f1 + sum(edges[eid].c1 for eid in chosen)
        f2 = _stretch(g, ids, "edge-restricted")
        value = l1 * f1 + l2 * f2
        if best is None or (value, f1, f2) < (best[0], best[1].f1, best[1].f2):
            best = (value, ValueVector(f1, f2), mask, ids)
    return best


def _scan_worker(payload: dict) -> list:
    """Process-pool entry point; rebuilds the graph and scans one mask range."""
    g = instance_from_dict(payload["instance"], validate=False)
    free, base, lo, hi = payload["free"], payload["base"], payload["lo"], payload["hi"]
    if payload["kind"] == "front":
        best = _scan_front_range(g, free, base, lo, hi)
        return [
            (vv.f1, vv.f2.numerator, vv.f2.denominator, mask, sorted(ids))
            for vv, (mask, ids) in best.items()
        ]
    l1n, l1d, l2n, l2d = payload["lam"]
    result = _scan_wsum_range(g, free, base, (Fraction(l1n, l1d), Fraction(l2n, l2d)), lo, hi)
    if result is None:
        return []
    value, vv, mask, ids = result
    return [
        (
            value.numerator,
            value.denominator,
            vv.f1,
            vv.f2.numerator,
            vv.f2.denominator,
            mask,
            sorted(ids),
        )
    ]


def _resolve_jobs(jobs: Optional[int]) -> int:
    if jobs is None:
        return os.cpu_count() or 1
    return max(1, jobs)


def _chunk_ranges(total: int, workers: int) -> list[tuple[int, int]]:
    chunk = -(-total // (workers * 4))
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def _scan_front(
    g: WeightedGraph, free: list[int], base: list[int], jobs: Optional[int]
) -> dict[ValueVector, tuple[int, frozenset[int]]]:
    total = 1 << len(free)
    workers = _resolve_jobs(jobs)
    if workers == 1 or total < _POOL_MIN_MASKS:
        return _scan_front_range(g, free, base, 0, total)
    payloads = [
        {"instance": instance_to_dict(g), "free": free, "base": base, "lo": lo, "hi": hi, "kind": "front"}
        for lo, hi in _chunk_ranges(total, workers)
    ]
    best: dict[ValueVector, tuple[int, frozenset[int]]] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rows in pool.map(_scan_worker, payloads):
            for f1, f2n, f2d, mask, ids in rows:
                vv = ValueVector(f1, Fraction(f2n, f2d))
                if vv not in best or mask < best[vv][0]:
                    best[vv] = (mask, frozenset(ids))
    return best


def _scan_wsum(
    g: WeightedGraph,
    free: list[int],
    base: list[int],
    lam: tuple[Fraction, Fraction],
    jobs: Optional[int],
) -> tuple[Fraction, ValueVector, int, frozenset[int]]:
    total = 1 << len(free)
    workers = _resolve_jobs(jobs)
    if workers == 1 or total < _POOL_MIN_MASKS:
        result = _scan_wsum_range(g, free, base, lam, 0, total)
        assert result is not None  # the full edge set is always feasible
        return result
    payloads = [
        {
            "instance": instance_to_dict(g),
            "free": free,
            "base": base,
            "lo": lo,
            "hi": hi,
            "kind": "wsum",
            "lam": (lam[0].numerator, lam[0].denominator, lam[1].numerator, lam[1].denominator),
        }
        for lo, hi in _chunk_ranges(total, workers)
    ]
    best = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rows in pool.map(_scan_worker, payloads):
            for vn, vd, f1, f2n, f2d, mask, ids in rows:
                cand = (Fraction(vn, vd), ValueVector(f1, Fraction(f2n, f2d)), mask, frozenset(ids))
                if best is None or (cand[0], cand[1].f1, cand[1].f2, cand[2]) < (
                    best[0],
                    best[1].f1,
                    best[1].f2,
                    best[2],
                ):
                    best = cand
    assert best is not None
    return best


def enumerate_front(
    g: WeightedGraph, budget: int = DEFAULT_BUDGET, *, jobs: Optional[int] = 1
) -> ParetoFront:
    """Exact non-dominated set with one witness spanner per point.

    Raises ``BudgetExceededError`` when more than ``budget`` edges have
    ``c1 > 0`` and ``InvalidInstanceError`` for malformed instances.
    """
    free, base = _split_free_edges(g, budget)
    best = _scan_front(g, free, base, jobs)
    front = nondominated_filter(best.keys())
    witnesses = {p: best[p][1] for p in front.points}
    return ParetoFront(front.points, witnesses)


def front_to_dict(front: ParetoFront, include_witnesses: bool = True) -> dict:
    points = [{"f1": p.f1, "f2": [p.f2.numerator, p.f2.denominator]} for p in front.points]
    witnesses = None
    if include_witnesses and front.witnesses is not None:
        witnesses = {str(i): sorted(front.witnesses[p]) for i, p in enumerate(front.points)}
    return {"points": points, "witnesses": witnesses}


def front_from_dict(data: dict) -> ParetoFront:
    points = tuple(ValueVector(int(p["f1"]), Fraction(int(p["f2"][0]), int(p["f2"][1]))) for p in data["points"])
    witnesses = None
    if data.get("witnesses"):
        witnesses = {points[int(i)]: frozenset(ids) for i, ids in data["witnesses"].items()}
    return ParetoFront(points, witnesses)
