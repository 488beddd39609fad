"""Executable desk-scale checks for the toolkit's structural claims.

Each verifier rebuilds its instance family from scratch, recomputes every
quantity with the exact solvers and reports pass/fail with a concrete
counterexample on failure.  Failures are reported, not raised; only genuine
input errors raise.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from dataclasses import dataclass, field

from .buco import BucoInstance, buco_brute
from .errors import NotUnweightedError
from .extreme import Lambda
from .generators import (
    CnfFormula,
    GraphBuilder,
    force_edge,
    filter_buco_front,
    gen_from_buco,
    gen_cai,
    gen_intractable,
    spanner_from_buco_solution,
    witness_spanner,
)
from .graphs import UnionFind, WeightedGraph, shortest_distances
from .objectives import Spanner, ValueVector, evaluate, is_spanner
from .pareto import DEFAULT_BUDGET, enumerate_front


@dataclass(frozen=True)
class Report:
    claim: str
    passed: bool
    details: dict = field(default_factory=dict)
    counterexample: Optional[dict] = None


def report_to_dict(report: Report) -> dict:
    return {
        "claim": report.claim,
        "pass": report.passed,
        "details": report.details,
        "counterexample": report.counterexample,
    }


def _point_json(p: ValueVector) -> list:
    return [p.f1, [p.f2.numerator, p.f2.denominator]]


# ---------------------------------------------------------------------------
# Exponential-front ladder
# ---------------------------------------------------------------------------


def intractable_x_points(n: int) -> frozenset[ValueVector]:
    """Closed-form staircase points of the ladder family.

    For each item subset ``T``: cost ``sum(2^i, i in T)`` and stretch
    ``sum(2^i, i in T) + sum(2^(i+1), i not in T) + n - 1``.
    """
    points = set()
    for bits in product((0, 1), repeat=n):
        f1 = sum(2**i for i, b in zip(range(1, n + 1), bits) if b)
        f2 = f1 + sum(2 ** (i + 1) for i, b in zip(range(1, n + 1), bits) if not b) + n - 1
        points.add(ValueVector(f1, Fraction(f2)))
    return frozenset(points)


def intractable_reference_front(n: int) -> frozenset[ValueVector]:
    """Full predicted front: staircase points plus the two shortcut points."""
    extra = {
        ValueVector(2 ** (n + 1), Fraction(2)),
        ValueVector(2 ** (n + 2) - 2, Fraction(1)),
    }
    return intractable_x_points(n) | extra


def verify_intractable(n: int, directed: bool = False, budget: int = DEFAULT_BUDGET) -> Report:
    """Check the exponential-front family: closed-form points, front size and
    the reduction of the stretch maximum to the ``s``-``t`` distance ratio."""
    g = gen_intractable(n, directed)
    front = enumerate_front(g, budget)
    claim = "intractable-family-front"
    details = {"n": n, "directed": directed, "front_size": len(front.points)}

    expected = intractable_x_points(n)
    missing = sorted(expected - front.point_set(), key=ValueVector.key)
    if missing:
        details["x_points_present"] = False
        return Report(claim, False, details, {"missing_point": _point_json(missing[0])})
    details["x_points_present"] = True

    if len(front.points) < 2**n:
        details["front_size_ok"] = False
        return Report(claim, False, details, {"front_size": len(front.points), "required": 2**n})
    details["front_size_ok"] = True

    # Stretch of every staircase spanner equals its s-t distance ratio.
    s, t = 0, 3 * n - 1
    base = [eid for eid, e in enumerate(g.edges) if e.c1 <= 0]
    for bits in product((0, 1), repeat=n):
        ids = frozenset(base) | {3 * i for i, b in enumerate(bits) if b}
        value = evaluate(g, Spanner(g, ids), "edge-restricted")
        dist_sub = shortest_distances(g, ids, s)[t]
        dist_full = shortest_distances(g, g.edge_ids, s)[t]
        if value.f2 != Fraction(dist_sub, dist_full):
            details["stretch_is_st_ratio"] = False
            return Report(
                claim,
                False,
                details,
                {"items": list(bits), "f2": _point_json(value)[1], "st_ratio": [dist_sub, dist_full]},
            )
    details["stretch_is_st_ratio"] = True
    return Report(claim, True, details)


# ---------------------------------------------------------------------------
# Knapsack reduction
# ---------------------------------------------------------------------------


def verify_buco_reduction(
    inst: BucoInstance, directed: bool = False, budget: int = DEFAULT_BUDGET
) -> Report:
    """Check the knapsack reduction roundtrip on one instance.

    The filtered ladder front must equal the brute-force knapsack front, the
    solution-to-spanner value transform must hold for every bit vector, at
    most ``n + 1`` front points may use the terminal shortcut, and the
    generated graph must respect its degree bound.
    """
    graph, meta = gen_from_buco(inst, directed)
    claim = "buco-reduction-roundtrip"
    details = {"n": inst.n, "directed": directed, "C1": meta.c1_total, "M": meta.big_m}

    degree = [0] * graph.vertex_count
    for e in graph.edges:
        degree[e.u] += 1
        degree[e.v] += 1
    bound = 4 if directed else 3
    details["max_degree"] = max(degree)
    if max(degree) > bound:
        return Report(claim, False, details, {"degree_bound": bound, "max_degree": max(degree)})

    offset = 3 * inst.n - 1
    for bits in product((0, 1), repeat=inst.n):
        from .buco import buco_value

        y = buco_value(inst, bits)
        predicted = ValueVector(meta.c1_total + y.f1, y.f2 + offset)
        actual = evaluate(graph, spanner_from_buco_solution(meta, bits))
        if actual != predicted:
            details["solution_transform_ok"] = False
            return Report(
                claim,
                False,
                details,
                {"solution": list(bits), "expected": _point_json(predicted), "actual": _point_json(actual)},
            )
    details["solution_transform_ok"] = True

    front = enumerate_front(graph, budget)
    shortcut_points = [p for p in front.points if p.f1 >= meta.big_m]
    details["shortcut_points"] = len(shortcut_points)
    if len(shortcut_points) > inst.n + 1:
        return Report(claim, False, details, {"shortcut_points": [_point_json(p) for p in shortcut_points]})

    recovered = filter_buco_front(front, meta)
    expected = buco_brute(inst)
    details["recovered_points"] = len(recovered.points)
    if recovered.points != expected.points:
        return Report(
            claim,
            False,
            details,
            {
                "recovered": [_point_json(p) for p in recovered.points],
                "expected": [_point_json(p) for p in expected.points],
            },
        )
    details["roundtrip_ok"] = True
    return Report(claim, True, details)


# ---------------------------------------------------------------------------
# Satisfiability family
# ---------------------------------------------------------------------------


def _min_two_stretch_sizes(g: WeightedGraph, forced_id: int) -> tuple[int, int]:
    """Sizes of the smallest stretch<=2 spanners with and without one edge."""
    best_with = len(g.edges) + 1
    best_without = len(g.edges) + 1
    all_min_contain_forced = True
    for mask in range(1 << len(g.edges)):
        ids = frozenset(eid for eid in range(len(g.edges)) if mask >> eid & 1)
        if not is_spanner(g, ids):
            continue
        if evaluate(g, Spanner(g, ids)).f2 > 2:
            continue
        if forced_id in ids:
            best_with = min(best_with, len(ids))
        else:
            best_without = min(best_without, len(ids))
    return best_with, best_without


def verify_cai(cnf: CnfFormula, assignment: Sequence[bool]) -> Report:
    """Check the satisfiability family: structure counts, witness values,
    single-edge removals, the scalarization inequality and the standalone
    forced-edge gadget."""
    g, meta = gen_cai(cnf)
    n, m = cnf.num_vars, cnf.num_clauses
    claim = "cai-witness-extreme-point"
    details = {"num_vars": n, "num_clauses": m}

    counts_ok = (
        g.vertex_count == 14 * n + 7 * m + 1
        and len(g.edges) == 29 * n + 16 * m
        and meta.k_target == 16 * n + 9 * m
        and len(meta.forced_edges) == 5 * n + 3 * m
    )
    details["vertices"] = g.vertex_count
    details["edges"] = len(g.edges)
    details["K"] = meta.k_target
    if not counts_ok:
        return Report(claim, False, details, {"expected_vertices": 14 * n + 7 * m + 1})

    witness = witness_spanner(g, meta, assignment)
    witness_value = evaluate(g, witness)
    details["witness_size"] = len(witness.edge_ids)
    details["witness_value"] = _point_json(witness_value)
    if len(witness.edge_ids) != meta.k_target or witness_value != ValueVector(meta.k_target, Fraction(2)):
        return Report(claim, False, details, {"witness_value": _point_json(witness_value)})

    full_value = evaluate(g, Spanner(g, g.all_edge_ids()))
    details["full_value"] = _point_json(full_value)
    if full_value != ValueVector(29 * n + 16 * m, Fraction(1)):
        return Report(claim, False, details, {"full_value": _point_json(full_value)})

    all_ids = g.all_edge_ids()
    for eid in range(len(g.edges)):
        ids = all_ids - {eid}
        if not is_spanner(g, ids):
            continue
        removed = evaluate(g, Spanner(g, ids))
        if removed.f2 != 2:
            details["single_removal_stretch_two"] = False
            return Report(claim, False, details, {"removed_edge": eid, "f2": _point_json(removed)[1]})
    details["single_removal_stretch_two"] = True

    lam = Lambda(Fraction(2), Fraction(15 * n + 9 * m))
    hypothetical = ValueVector(14 * n + 7 * m, Fraction(3))
    score_witness = lam.score(witness_value)
    score_full = lam.score(full_value)
    score_hypothetical = lam.score(hypothetical)
    details["lambda"] = [2, 15 * n + 9 * m]
    details["score_witness"] = int(score_witness)
    details["score_full"] = int(score_full)
    inequality_ok = (
        score_witness == 62 * n + 36 * m
        and score_full == 73 * n + 41 * m
        and score_full == score_hypothetical
        and score_witness < score_full
    )
    if not inequality_ok:
        return Report(claim, False, details, {"scores": [int(score_witness), int(score_full)]})
    details["scalarization_strictly_minimal"] = True

    b = GraphBuilder()
    u, v = b.new_vertex(), b.new_vertex()
    gadget = force_edge(b, u, v)
    standalone = b.build()
    best_with, best_without = _min_two_stretch_sizes(standalone, gadget.forced)
    details["gadget_min_with_forced"] = best_with
    details["gadget_min_without_forced"] = best_without
    if best_with != 3 or best_without != 4:
        return Report(claim, False, details, {"gadget_sizes": [best_with, best_without]})

    return Report(claim, True, details)


# ---------------------------------------------------------------------------
# Unweighted front bound
# ---------------------------------------------------------------------------


def verify_unweighted_bound(g: WeightedGraph, budget: int = DEFAULT_BUDGET) -> Report:
    """For instances with all weights (1, 1) the front has at most |E| points."""
    if any(e.c1 != 1 or e.c2 != 1 for e in g.edges):
        raise NotUnweightedError("instance has an edge with weights other than (1, 1)")
    front = enumerate_front(g, budget)
    claim = "unweighted-front-bound"
    details = {"edges": len(g.edges), "front_size": len(front.points)}
    if len(front.points) > len(g.edges):
        return Report(claim, False, details, {"front": [_point_json(p) for p in front.points]})
    return Report(claim, True, details)
