"""Spanner feasibility, the two objective functions and dominance.

The cost objective sums ``c1`` over the chosen edges.  The stretch objective
is the maximum, over a set of vertex pairs, of the ratio between the
c2-distance inside the spanner and the c2-distance in the full graph; it is
kept as an exact ``Fraction`` throughout, never a float.

Two stretch modes are supported.  ``all-pairs`` ranges over every vertex
pair (for directed graphs: every ordered pair connected in the full graph).
``edge-restricted`` ranges only over endpoint pairs of original edges, which
yields the same maximum for every feasible spanner and is cheaper.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .errors import InfeasibleSpannerError
from .graphs import (
    UnionFind,
    WeightedGraph,
    _dijkstra,
    _full_distances,
    _full_reach_counts,
    _reachable_from,
    reachable_pairs,
)

Mode = Literal["edge-restricted", "all-pairs"]

MODES: tuple[Mode, ...] = ("edge-restricted", "all-pairs")


@dataclass(frozen=True)
class ValueVector:
    """Objective value pair ``(f1, f2)`` with an exact rational stretch."""

    f1: int
    f2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "f2", Fraction(self.f2))

    def key(self) -> tuple[int, Fraction]:
        return (self.f1, self.f2)


@dataclass(frozen=True)
class Spanner:
    """An edge subset of a fixed instance."""

    graph: WeightedGraph
    edge_ids: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", frozenset(self.edge_ids))


def dominates(a: ValueVector, b: ValueVector) -> bool:
    """Component-wise ``a <= b`` with ``a != b``; equal vectors do not dominate."""
    return a != b and a.f1 <= b.f1 and a.f2 <= b.f2


def is_spanner(g: WeightedGraph, edge_ids: Iterable[int]) -> bool:
    """Feasibility: connectivity (undirected) or preserved reachability (directed)."""
    ids = frozenset(edge_ids)
    if not g.directed:
        uf = UnionFind(g.vertex_count)
        for eid in ids:
            e = g.edges[eid]
            uf.union(e.u, e.v)
        return uf.components == 1
    targets = _full_reach_counts(g)
    key = ids if len(ids) < len(g.edges) else None
    for src in range(g.vertex_count):
        if len(_reachable_from(g, key, src)) != targets[src]:
            return False
    return True


def _objective_pairs(g: WeightedGraph, mode: Mode) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Vertex pairs over which the stretch maximum ranges, grouped by source."""

    def build():
        grouped: dict[int, list[int]] = {}
        if mode == "edge-restricted":
            for e in g.edges:
                grouped.setdefault(e.u, []).append(e.v)
        elif g.directed:
            for u, v in sorted(reachable_pairs(g, g.edge_ids)):
                grouped.setdefault(u, []).append(v)
        else:
            for u in range(g.vertex_count):
                for v in range(u + 1, g.vertex_count):
                    grouped.setdefault(u, []).append(v)
        return tuple((src, tuple(vs)) for src, vs in sorted(grouped.items()))

    return g._memo(("pairs", mode), build)


def _f1(g: WeightedGraph, edge_ids: frozenset[int]) -> int:
    return sum(g.edges[eid].c1 for eid in edge_ids)


def _stretch(g: WeightedGraph, edge_ids: frozenset[int], mode: Mode) -> Fraction:
    """Maximum distance ratio over the mode's pair set; 1 when the set is empty.

    Assumes ``edge_ids`` is feasible, so every required pair stays reachable.
    """
    best = Fraction(1)
    full = len(edge_ids) == len(g.edges)
    for src, targets in _objective_pairs(g, mode):
        dist_sub = _full_distances(g, src) if full else _dijkstra(g, edge_ids, src)
        dist_full = _full_distances(g, src)
        for v in targets:
            ds = dist_sub[v]
            if ds is None:
                raise InfeasibleSpannerError(f"pair ({src},{v}) unreachable in the spanner")
            ratio = Fraction(ds, dist_full[v])
            if ratio > best:
                best = ratio
    return best


def evaluate(g: WeightedGraph, spanner: Spanner, mode: Mode = "edge-restricted") -> ValueVector:
    """Objective values of a feasible spanner.

    Raises ``InfeasibleSpannerError`` when the edge set is not a spanner.
    """
    ids = frozenset(spanner.edge_ids)
    if not is_spanner(g, ids):
        raise InfeasibleSpannerError("edge set is not a feasible spanner")
    return ValueVector(_f1(g, ids), _stretch(g, ids, mode))


def value_vector_to_dict(v: ValueVector) -> dict:
    return {"f1": v.f1, "f2": [v.f2.numerator, v.f2.denominator]}


def value_vector_from_dict(data: dict) -> ValueVector:
    num, den = data["f2"]
    return ValueVector(int(data["f1"]), Fraction(int(num), int(den)))
