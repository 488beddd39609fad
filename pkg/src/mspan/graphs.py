"""Weighted graph instances, validation, shortest paths and reachability.

An instance is a simple graph (no self-loops, no parallel edges) whose edges
carry an integer cost ``c1`` and a positive integer length ``c2``.  Edges are
identified by their position in the edge list and instances are immutable
once built, so edge-id sets are a stable encoding for subgraphs.

Undirected instances must be connected, directed ones weakly connected.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import InvalidInstanceError


class Edge(NamedTuple):
    u: int
    v: int
    c1: int
    c2: int


class InstanceIssue(NamedTuple):
    code: str
    message: str


class UnionFind:
    """Disjoint sets over ``range(n)`` with union by size and path halving."""

    __slots__ = ("parent", "size", "components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def clone(self) -> "UnionFind":
        other = UnionFind.__new__(UnionFind)
        other.parent = self.parent.copy()
        other.size = self.size.copy()
        other.components = self.components
        return other

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


@dataclass(frozen=True)
class WeightedGraph:
    directed: bool
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        object.__setattr__(self, "_cache", {})

    @property
    def edge_ids(self) -> range:
        return range(len(self.edges))

    def all_edge_ids(self) -> frozenset[int]:
        return frozenset(range(len(self.edges)))

    def _memo(self, key, build):
        cache = self.__dict__["_cache"]
        if key not in cache:
            cache[key] = build()
        return cache[key]

    def adjacency(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per-vertex outgoing ``(edge_id, head, c2)`` triples.

        Undirected edges appear in the lists of both endpoints.
        """

        def build():
            out: list[list[tuple[int, int, int]]] = [[] for _ in range(self.vertex_count)]
            for eid, e in enumerate(self.edges):
                out[e.u].append((eid, e.v, e.c2))
                if not self.directed:
                    out[e.v].append((eid, e.u, e.c2))
            return tuple(tuple(lst) for lst in out)

        return self._memo("adjacency", build)


@dataclass(frozen=True)
class DistanceMap:
    """Single-source distances; ``None`` marks an unreachable vertex."""

    source: int
    dist: tuple[Optional[int], ...]

    def __getitem__(self, vertex: int) -> Optional[int]:
        return self.dist[vertex]


def validate_instance(g: WeightedGraph) -> list[InstanceIssue]:
    """Return every invariant violation of ``g``; an empty list means ok."""
    issues: list[InstanceIssue] = []
    if g.vertex_count < 1:
        issues.append(InstanceIssue("BAD_VERTEX_ID", "vertex_count must be at least 1"))
        return issues

    seen: set[tuple[int, int]] = set()
    usable: list[Edge] = []
    for eid, e in enumerate(g.edges):
        if not (0 <= e.u < g.vertex_count) or not (0 <= e.v < g.vertex_count):
            issues.append(InstanceIssue("BAD_VERTEX_ID", f"edge {eid} endpoints ({e.u},{e.v}) out of range"))
            continue
        if e.u == e.v:
            issues.append(InstanceIssue("SELF_LOOP", f"edge {eid} is a self-loop at {e.u}"))
            continue
        key = (e.u, e.v) if g.directed else (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            issues.append(InstanceIssue("PARALLEL_EDGE", f"edge {eid} duplicates pair {key}"))
        else:
            seen.add(key)
        if e.c2 <= 0:
            issues.append(InstanceIssue("NONPOSITIVE_C2", f"edge {eid} has c2={e.c2}"))
        usable.append(e)

    uf = UnionFind(g.vertex_count)
    for e in usable:
        uf.union(e.u, e.v)
    if uf.components != 1:
        kind = "weakly connected" if g.directed else "connected"
        issues.append(InstanceIssue("DISCONNECTED", f"graph is not {kind} ({uf.components} components)"))
    return issues


def require_valid(g: WeightedGraph) -> None:
    issues = validate_instance(g)
    if issues:
        raise InvalidInstanceError(issues)


def _dijkstra(g: WeightedGraph, edge_ids: Optional[frozenset[int]], source: int) -> list[Optional[int]]:
    """Distances in the subgraph given by ``edge_ids`` (``None`` = all edges)."""
    adjacency = g.adjacency()
    dist: list[Optional[int]] = [None] * g.vertex_count
    dist[source] = 0
    heap: list[tuple[int, int]] = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:  # type: ignore[operator]
            continue
        for eid, v, w in adjacency[u]:
            if edge_ids is not None and eid not in edge_ids:
                continue
            nd = d + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _full_distances(g: WeightedGraph, source: int) -> list[Optional[int]]:
    """Distances in the full graph, cached per source."""
    return g._memo(("dist", source), lambda: _dijkstra(g, None, source))


def shortest_distances(g: WeightedGraph, edge_subset: Iterable[int], source: int) -> DistanceMap:
    """Exact c2-shortest-path distances within the subgraph ``(V, edge_subset)``."""
    ids = frozenset(edge_subset)
    if len(ids) == len(g.edges):
        return DistanceMap(source, tuple(_full_distances(g, source)))
    return DistanceMap(source, tuple(_dijkstra(g, ids, source)))


def _reachable_from(g: WeightedGraph, edge_ids: Optional[frozenset[int]], source: int) -> list[int]:
    adjacency = g.adjacency()
    seen = [False] * g.vertex_count
    seen[source] = True
    stack = [source]
    order = [source]
    while stack:
        u = stack.pop()
        for eid, v, _ in adjacency[u]:
            if edge_ids is not None and eid not in edge_ids:
                continue
            if not seen[v]:
                seen[v] = True
                stack.append(v)
                order.append(v)
    return order


def reachable_pairs(g: WeightedGraph, edge_subset: Iterable[int]) -> frozenset[tuple[int, int]]:
    """All ordered pairs ``(u, v)``, ``u != v``, joined by a path in the subgraph.

    For undirected graphs the result is symmetric.
    """
    ids = frozenset(edge_subset)
    key = ids if len(ids) < len(g.edges) else None
    pairs = set()
    for src in range(g.vertex_count):
        for v in _reachable_from(g, key, src):
            if v != src:
                pairs.add((src, v))
    return frozenset(pairs)


def _full_reach_counts(g: WeightedGraph) -> list[int]:
    """Number of vertices reachable from each source in the full graph (cached)."""
    return g._memo(
        "reach_counts",
        lambda: [len(_reachable_from(g, None, src)) for src in range(g.vertex_count)],
    )


def instance_to_dict(g: WeightedGraph) -> dict:
    return {
        "directed": g.directed,
        "vertices": g.vertex_count,
        "edges": [{"u": e.u, "v": e.v, "c1": e.c1, "c2": e.c2} for e in g.edges],
    }


def instance_from_dict(data: dict, validate: bool = True) -> WeightedGraph:
    edges = tuple(Edge(int(e["u"]), int(e["v"]), int(e["c1"]), int(e["c2"])) for e in data["edges"])
    g = WeightedGraph(bool(data["directed"]), int(data["vertices"]), edges)
    if validate:
        require_valid(g)
    return g
