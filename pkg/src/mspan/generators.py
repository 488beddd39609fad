"""Constructors for the three benchmark instance families.

All vertex and edge ids follow fixed, documented layouts so that generated
instances are reproducible byte for byte and companion objects (witness
spanners, filter-back transforms) can address edges by id.

Ladder families (exponential-front and knapsack-reduction instances) use,
for item ``i`` in ``1..n`` (0-based ids):

    v_i = 3*(i-1),  v'_i = 3*(i-1)+1,  w_i = 3*(i-1)+2

with edges emitted gadget by gadget, then the chain edges ``w_i - v_{i+1}``,
then the terminal shortcut edge ``s - t`` (``s = v_1``, ``t = w_n``) last.

The satisfiability family puts the hub ``z`` at vertex 0, then per variable
the four vertices ``x, x_bar, y, y'``, then one vertex per clause; the two
interior vertices of every forcing 2-path pair are appended after all of
these, in construction order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .buco import BucoInstance
from .errors import (
    LengthMismatchError,
    MalformedCnfError,
    NonIntegralF2Error,
    NTooSmallError,
    UnsatisfyingAssignmentError,
)
from .graphs import Edge, WeightedGraph, require_valid
from .objectives import Spanner, ValueVector
from .pareto import ParetoFront


class GraphBuilder:
    """Accumulates vertices and edges, then builds a validated instance."""

    def __init__(self, directed: bool = False, vertices: int = 0):
        self.directed = directed
        self.vertex_count = vertices
        self.edges: list[Edge] = []

    def new_vertex(self) -> int:
        self.vertex_count += 1
        return self.vertex_count - 1

    def add_edge(self, u: int, v: int, c1: int, c2: int) -> int:
        self.edges.append(Edge(u, v, c1, c2))
        return len(self.edges) - 1

    def build(self) -> WeightedGraph:
        g = WeightedGraph(self.directed, self.vertex_count, tuple(self.edges))
        require_valid(g)
        return g


class ForceGadget(NamedTuple):
    """Edge ids of a forced edge and its two forcing 2-paths.

    ``paths`` holds ``(u-p1, p1-v, u-p2, p2-v)``; the edges touching ``u``
    come first within each path.
    """

    forced: int
    paths: tuple[int, int, int, int]


def force_edge(builder: GraphBuilder, u: int, v: int) -> ForceGadget:
    """Add edge ``{u, v}`` plus two disjoint 2-paths between its endpoints.

    All five edges get weights (1, 1); the two interior path vertices are
    fresh.  In any minimum subgraph with stretch at most 2 the direct edge
    must be present.
    """
    forced = builder.add_edge(u, v, 1, 1)
    p1 = builder.new_vertex()
    e1 = builder.add_edge(u, p1, 1, 1)
    e2 = builder.add_edge(p1, v, 1, 1)
    p2 = builder.new_vertex()
    e3 = builder.add_edge(u, p2, 1, 1)
    e4 = builder.add_edge(p2, v, 1, 1)
    return ForceGadget(forced, (e1, e2, e3, e4))


# ---------------------------------------------------------------------------
# Exponential-front ladder
# ---------------------------------------------------------------------------


def gen_intractable(n: int, directed: bool = False) -> WeightedGraph:
    """Ladder of ``n`` three-vertex gadgets whose front has 2**n staircase points.

    Item ``i`` gets edge ``v_i - w_i`` with weights ``(2^i, 2^i)`` and the
    detour edges ``v_i - v'_i`` and ``v'_i - w_i`` with weights ``(0, 2^i)``;
    consecutive gadgets are chained by ``(0, 1)`` edges and a shortcut
    ``s - t`` edge with weights ``(2^(n+1), 1)`` closes the ladder.  Edge ids:
    ``3*(i-1)`` for ``v_i - w_i``, chain edges at ``3n .. 4n-2``, shortcut
    last (id ``4n - 1``).  The graph is degree-3 bounded and outerplanar; the
    directed variant orients every edge from ``s`` toward ``t``.
    """
    if n < 2:
        raise NTooSmallError(f"ladder needs n >= 2, got {n}")
    b = GraphBuilder(directed, vertices=3 * n)
    for i in range(1, n + 1):
        v, vp, w = 3 * (i - 1), 3 * (i - 1) + 1, 3 * (i - 1) + 2
        b.add_edge(v, w, 2**i, 2**i)
        b.add_edge(v, vp, 0, 2**i)
        b.add_edge(vp, w, 0, 2**i)
    for i in range(1, n):
        b.add_edge(3 * (i - 1) + 2, 3 * i, 0, 1)
    b.add_edge(0, 3 * n - 1, 2 ** (n + 1), 1)
    return b.build()


def intractable_layout(n: int, directed: bool) -> dict:
    """Vertex and edge id map of ``gen_intractable(n, directed)``."""
    return {
        "family": "intractable",
        "n": n,
        "directed": directed,
        "s": 0,
        "t": 3 * n - 1,
        "item_edges": [[3 * (i - 1), 3 * (i - 1) + 1, 3 * (i - 1) + 2] for i in range(1, n + 1)],
        "chain_edges": list(range(3 * n, 4 * n - 1)),
        "st_edge": 4 * n - 1,
    }


# ---------------------------------------------------------------------------
# Knapsack reduction ladder
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BucoReductionMetadata:
    """Companion data of a knapsack-reduction instance.

    ``gadget_edges[i]`` holds the ids of ``(v_i-w_i, v_i-v'_i, v'_i-w_i)``;
    the third entry is the priced shortcut dropped when item ``i`` is taken.
    """

    graph: WeightedGraph
    source: BucoInstance
    c1_total: int
    big_m: int
    n: int
    gadget_edges: tuple[tuple[int, int, int], ...]
    st_edge: int
    back_arcs: tuple[int, ...]
    directed: bool


def gen_from_buco(inst: BucoInstance, directed: bool = False) -> tuple[WeightedGraph, BucoReductionMetadata]:
    """Ladder instance whose filtered front recovers the knapsack front.

    Item ``i`` gets ``v_i - w_i`` with weights ``(0, c2_i + 2)``, ``v_i - v'_i``
    with ``(0, 1)`` and ``v'_i - w_i`` with ``(c1_i, 1)``; the terminal
    shortcut ``s - t`` carries ``(M, 1)`` with ``M = sum(c1) + 1``.  The
    directed variant appends one back arc ``v'_i -> v_i`` with ``(0, 1)``
    per item (after the three gadget arcs) to keep reachability intact.

    Needs ``n >= 2``: with a single item the terminal shortcut would
    duplicate the ``v_1 - w_1`` edge and the stretch bookkeeping degenerates.
    """
    if inst.n < 2:
        raise NTooSmallError(f"reduction ladder needs n >= 2 items, got {inst.n}")
    c1_total = sum(inst.c1)
    big_m = c1_total + 1
    n = inst.n
    b = GraphBuilder(directed, vertices=3 * n)
    gadgets: list[tuple[int, int, int]] = []
    back_arcs: list[int] = []
    for i in range(1, n + 1):
        v, vp, w = 3 * (i - 1), 3 * (i - 1) + 1, 3 * (i - 1) + 2
        direct = b.add_edge(v, w, 0, inst.c2[i - 1] + 2)
        detour = b.add_edge(v, vp, 0, 1)
        shortcut = b.add_edge(vp, w, inst.c1[i - 1], 1)
        gadgets.append((direct, detour, shortcut))
        if directed:
            back_arcs.append(b.add_edge(vp, v, 0, 1))
    for i in range(1, n):
        b.add_edge(3 * (i - 1) + 2, 3 * i, 0, 1)
    st_edge = b.add_edge(0, 3 * n - 1, big_m, 1)
    graph = b.build()
    meta = BucoReductionMetadata(
        graph=graph,
        source=inst,
        c1_total=c1_total,
        big_m=big_m,
        n=n,
        gadget_edges=tuple(gadgets),
        st_edge=st_edge,
        back_arcs=tuple(back_arcs),
        directed=directed,
    )
    return graph, meta


def spanner_from_buco_solution(meta: BucoReductionMetadata, x: Sequence[int]) -> Spanner:
    """Spanner encoding a 0/1 solution: taking item ``i`` drops its priced shortcut.

    The result contains every edge except the terminal ``s - t`` shortcut and
    except ``v'_i - w_i`` for each taken item; it is always feasible.
    """
    if len(x) != meta.n:
        raise LengthMismatchError(f"solution has {len(x)} bits, expected {meta.n}")
    ids = set(range(len(meta.graph.edges)))
    ids.discard(meta.st_edge)
    for bit, (_, _, shortcut) in zip(x, meta.gadget_edges):
        if bit:
            ids.discard(shortcut)
    return Spanner(meta.graph, frozenset(ids))


def filter_buco_front(msp_front: ParetoFront, meta: BucoReductionMetadata) -> ParetoFront:
    """Map the ladder front back to the knapsack front.

    Points with ``f1 >= M`` come from spanners using the terminal shortcut
    and are dropped; the rest shift by ``(-sum(c1), -(3n - 1))``.  A retained
    point with non-integral stretch signals a malformed front.
    """
    offset = 3 * meta.n - 1
    points = []
    for p in msp_front.points:
        if p.f1 >= meta.big_m:
            continue
        if p.f2.denominator != 1:
            raise NonIntegralF2Error(f"retained point {p} has non-integral stretch")
        points.append(ValueVector(p.f1 - meta.c1_total, p.f2 - offset))
    return ParetoFront(tuple(points))


def buco_metadata_to_dict(meta: BucoReductionMetadata) -> dict:
    return {
        "family": "from-buco",
        "C1": meta.c1_total,
        "M": meta.big_m,
        "n": meta.n,
        "gadget_edges": [list(t) for t in meta.gadget_edges],
        "st_edge": meta.st_edge,
        "back_arcs": list(meta.back_arcs),
        "directed": meta.directed,
    }


# ---------------------------------------------------------------------------
# Satisfiability family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula; a literal is a signed 1-based variable index."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise MalformedCnfError("formula needs at least one variable")
        normalized = []
        for clause in self.clauses:
            lits = tuple(sorted(set(int(l) for l in clause), key=lambda l: (abs(l), l)))
            if len(lits) != 3:
                raise MalformedCnfError(f"clause {clause} must hold exactly 3 distinct literals")
            for lit in lits:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise MalformedCnfError(f"literal {lit} out of range for {self.num_vars} variables")
            normalized.append(lits)
        if not normalized:
            raise MalformedCnfError("formula needs at least one clause")
        object.__setattr__(self, "clauses", tuple(normalized))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfies(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.num_vars:
            raise LengthMismatchError(
                f"assignment has {len(assignment)} values, expected {self.num_vars}"
            )
        return all(
            any(bool(assignment[abs(l) - 1]) == (l > 0) for l in clause) for clause in self.clauses
        )


@dataclass(frozen=True)
class CaiMetadata:
    """Companion data of a satisfiability instance.

    ``literal_edges[i]`` holds the ids of the hub edges ``z - x_i`` and
    ``z - x_bar_i``; exactly one of the two enters a witness spanner.
    """

    formula: CnfFormula
    k_target: int
    z: int
    forced_edges: frozenset[int]
    literal_edges: dict[int, tuple[int, int]]
    hub_edges: tuple[int, ...]
    clause_vertices: tuple[int, ...]
    force_gadgets: tuple[ForceGadget, ...]

    @property
    def num_vars(self) -> int:
        return self.formula.num_vars

    @property
    def num_clauses(self) -> int:
        return self.formula.num_clauses


def gen_cai(cnf: CnfFormula) -> tuple[WeightedGraph, CaiMetadata]:
    """Unweighted instance of the classic 3SAT-to-minimum-2-spanner reduction.

    Per variable: a hub ``z`` joined to the literal vertices ``x, x_bar`` and
    to ``y, y'``, plus forced edges ``x-x_bar, x-y, x-y', x_bar-y, x_bar-y'``.
    Per clause: one vertex joined to ``z`` by an edge and to each of its
    three literal vertices by a forced edge.  All weights are (1, 1).

    The instance has ``14n + 7m + 1`` vertices, ``29n + 16m`` edges and
    witness size target ``K = 16n + 9m``.
    """
    n, m = cnf.num_vars, cnf.num_clauses
    b = GraphBuilder(directed=False, vertices=1 + 4 * n + m)
    z = 0

    def x(i: int) -> int:
        return 4 * (i - 1) + 1

    def x_bar(i: int) -> int:
        return 4 * (i - 1) + 2

    def y(i: int) -> int:
        return 4 * (i - 1) + 3

    def y_prime(i: int) -> int:
        return 4 * (i - 1) + 4

    clause_vertices = tuple(4 * n + 1 + j for j in range(m))

    forced: list[int] = []
    gadgets: list[ForceGadget] = []
    literal_edges: dict[int, tuple[int, int]] = {}
    hub_edges: list[int] = []

    def force(u: int, v: int) -> None:
        gadget = force_edge(b, u, v)
        forced.append(gadget.forced)
        gadgets.append(gadget)

    for i in range(1, n + 1):
        pos = b.add_edge(z, x(i), 1, 1)
        neg = b.add_edge(z, x_bar(i), 1, 1)
        hub_edges.extend((pos, neg))
        hub_edges.append(b.add_edge(z, y(i), 1, 1))
        hub_edges.append(b.add_edge(z, y_prime(i), 1, 1))
        literal_edges[i] = (pos, neg)
        force(x(i), x_bar(i))
        force(x(i), y(i))
        force(x(i), y_prime(i))
        force(x_bar(i), y(i))
        force(x_bar(i), y_prime(i))

    for j, clause in enumerate(cnf.clauses):
        vc = clause_vertices[j]
        hub_edges.append(b.add_edge(z, vc, 1, 1))
        for lit in clause:
            target = x(abs(lit)) if lit > 0 else x_bar(abs(lit))
            force(vc, target)

    graph = b.build()
    meta = CaiMetadata(
        formula=cnf,
        k_target=16 * n + 9 * m,
        z=z,
        forced_edges=frozenset(forced),
        literal_edges=literal_edges,
        hub_edges=tuple(hub_edges),
        clause_vertices=clause_vertices,
        force_gadgets=tuple(gadgets),
    )
    return graph, meta


def witness_spanner(g: WeightedGraph, meta: CaiMetadata, assignment: Sequence[bool]) -> Spanner:
    """Spanner of size ``K`` with stretch exactly 2, from a satisfying assignment.

    Takes every forced edge, the first edge of each forcing 2-path and, per
    variable, the hub edge of the literal made true.  Raises
    ``UnsatisfyingAssignmentError`` before building anything otherwise.
    """
    if not meta.formula.satisfies(assignment):
        raise UnsatisfyingAssignmentError("assignment does not satisfy the formula")
    ids: set[int] = set()
    for gadget in meta.force_gadgets:
        ids.add(gadget.forced)
        ids.add(gadget.paths[0])
        ids.add(gadget.paths[2])
    for var, (pos, neg) in meta.literal_edges.items():
        ids.add(pos if assignment[var - 1] else neg)
    return Spanner(g, frozenset(ids))


def cai_metadata_to_dict(meta: CaiMetadata) -> dict:
    return {
        "family": "from-cnf",
        "num_vars": meta.num_vars,
        "num_clauses": meta.num_clauses,
        "K": meta.k_target,
        "z": meta.z,
        "forced_edges": sorted(meta.forced_edges),
        "literal_edges": {str(var): list(pair) for var, pair in sorted(meta.literal_edges.items())},
        "hub_edges": list(meta.hub_edges),
        "clause_vertices": list(meta.clause_vertices),
        "force_gadgets": [[g.forced, list(g.paths)] for g in meta.force_gadgets],
    }
