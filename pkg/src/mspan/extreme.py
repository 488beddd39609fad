"""Extreme points of a front: weighted-sum scalarization and certificates.

A front point is extreme when some nonnegative, nonzero weight vector makes
it the strictly unique minimizer of the weighted objective sum over the
whole non-dominated set.  Geometrically these are the vertices of the
lower-left convex hull of the front; points interior to a hull edge are
supported but not extreme.

Two independent routes are provided: hull extraction from a known front and
a dichotomic search driven only by exact weighted-sum minimizations.  All
arithmetic is rational; no tolerances are involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graphs import WeightedGraph
from .objectives import Spanner, ValueVector
from .pareto import DEFAULT_BUDGET, ParetoFront, _scan_wsum, _split_free_edges


@dataclass(frozen=True)
class Lambda:
    """Nonnegative objective weights, not both zero."""

    l1: Fraction
    l2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l1", Fraction(self.l1))
        object.__setattr__(self, "l2", Fraction(self.l2))
        if self.l1 < 0 or self.l2 < 0 or (self.l1 == 0 and self.l2 == 0):
            raise ValueError(f"weights must be nonnegative and not both zero: {self}")

    def score(self, point: ValueVector) -> Fraction:
        return self.l1 * point.f1 + self.l2 * point.f2


@dataclass(frozen=True)
class ExtremeCertificate:
    """An extreme point together with a weight vector it uniquely minimizes."""

    point: ValueVector
    lam: Lambda


def weighted_sum_min(
    g: WeightedGraph,
    lam: Lambda,
    budget: int = DEFAULT_BUDGET,
    *,
    jobs: Optional[int] = 1,
) -> tuple[Fraction, Spanner]:
    """Exact minimum of ``l1*f1 + l2*f2`` over feasible spanners, with a witness.

    Ties break to the lexicographically smallest ``(f1, f2)`` value vector,
    then to the first witness in ascending-bitmask enumeration order.
    """
    free, base = _split_free_edges(g, budget)
    value, _, _, ids = _scan_wsum(g, free, base, (lam.l1, lam.l2), jobs)
    return value, Spanner(g, ids)


def _lower_hull(points: Sequence[ValueVector]) -> list[ValueVector]:
    """Vertices of the lower-left convex hull of an ``f1``-sorted front.

    Collinear interior points are dropped: they are never unique minimizers.
    """
    hull: list[ValueVector] = []
    for p in points:
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            cross = (a.f1 - o.f1) * (p.f2 - o.f2) - (a.f2 - o.f2) * (p.f1 - o.f1)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _edge_normal(a: ValueVector, b: ValueVector) -> tuple[Fraction, Fraction]:
    """Positive weight vector scoring the hull edge ``a -> b`` endpoints equally."""
    return (Fraction(a.f2 - b.f2), Fraction(b.f1 - a.f1))


def _certificates(
    vertices: Sequence[ValueVector], reference: Optional[Sequence[ValueVector]] = None
) -> list[ExtremeCertificate]:
    """Certificates for hull vertices sorted by ascending ``f1``.

    ``reference`` supplies the point set used to size the endpoint
    perturbations; it must contain no point strictly below the hull.
    """
    others = list(reference if reference is not None else vertices)
    if len(vertices) == 1:
        return [ExtremeCertificate(vertices[0], Lambda(Fraction(1), Fraction(1)))]

    certs: list[ExtremeCertificate] = []
    first, last = vertices[0], vertices[-1]
    eps = min(Fraction(y.f1 - first.f1, first.f2 - y.f2) for y in others if y != first)
    certs.append(ExtremeCertificate(first, Lambda(Fraction(1), eps / 2)))
    for left, mid, right in zip(vertices, vertices[1:], vertices[2:]):
        n1 = _edge_normal(left, mid)
        n2 = _edge_normal(mid, right)
        certs.append(ExtremeCertificate(mid, Lambda(n1[0] + n2[0], n1[1] + n2[1])))
    eps = min(Fraction(y.f2 - last.f2, last.f1 - y.f1) for y in others if y != last)
    certs.append(ExtremeCertificate(last, Lambda(eps / 2, Fraction(1))))
    return certs


def extreme_from_front(front: ParetoFront) -> list[ExtremeCertificate]:
    """Extreme points of a front via lower convex hull extraction."""
    if not front.points:
        return []
    vertices = _lower_hull(front.points)
    return _certificates(vertices, reference=front.points)


def extreme_dichotomic(
    g: WeightedGraph, budget: int = DEFAULT_BUDGET, *, jobs: Optional[int] = 1
) -> list[ExtremeCertificate]:
    """Extreme points found by weighted-sum minimizations alone.

    Starts from the two lexicographic extremes (computed through exactly
    perturbed weights) and recursively probes the weight normal to each pair
    of adjacent known points, stopping when the minimum matches the chord.
    """
    free, base = _split_free_edges(g, budget)

    # Perturbations small enough that the scalar order equals the
    # lexicographic order: f2 lives in [1, sum(c2)] with denominators at
    # most sum(c2), and f1 steps are integers of size at most sum(|c1|).
    s2 = max(1, sum(e.c2 for e in g.edges))
    a1 = max(1, sum(abs(e.c1) for e in g.edges))
    eps_f2 = Fraction(1, 2 * (s2 + 1))
    eps_f1 = Fraction(1, 4 * (a1 + 1) * s2 * s2)

    def probe(lam: tuple[Fraction, Fraction]) -> ValueVector:
        _, vv, _, _ = _scan_wsum(g, free, base, lam, jobs)
        return vv

    left = probe((Fraction(1), eps_f2))
    right = probe((eps_f1, Fraction(1)))
    if left == right:
        return _certificates([left])

    found = {left, right}

    def recurse(a: ValueVector, b: ValueVector) -> None:
        lam = _edge_normal(a, b)
        value, vv, _, _ = _scan_wsum(g, free, base, lam, jobs)
        if value == lam[0] * a.f1 + lam[1] * a.f2:
            return
        found.add(vv)
        recurse(a, vv)
        recurse(vv, b)

    recurse(left, right)
    vertices = sorted(found, key=ValueVector.key)
    return _certificates(vertices)


def certificate_to_dict(cert: ExtremeCertificate) -> dict:
    return {
        "point": {"f1": cert.point.f1, "f2": [cert.point.f2.numerator, cert.point.f2.denominator]},
        "lambda": [
            [cert.lam.l1.numerator, cert.lam.l1.denominator],
            [cert.lam.l2.numerator, cert.lam.l2.denominator],
        ],
    }
