"""Biobjective unconstrained combinatorial optimization over bit vectors.

An instance is a pair of positive integer vectors; a solution picks a subset
of items, maximizing total ``c1`` value (stored negated, so both objectives
are minimized) while minimizing total ``c2`` weight.  Two independent exact
solvers are provided: full enumeration and a knapsack-style dynamic program
over achievable weights.  They must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidBucoInstanceError, LengthMismatchError, TooLargeError
from .objectives import ValueVector
from .pareto import ParetoFront, nondominated_filter

BRUTE_MAX_ITEMS = 24
DP_MAX_WEIGHT = 10**6


@dataclass(frozen=True)
class BucoInstance:
    c1: tuple[int, ...]
    c2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c1", tuple(int(x) for x in self.c1))
        object.__setattr__(self, "c2", tuple(int(x) for x in self.c2))
        if len(self.c1) != len(self.c2):
            raise LengthMismatchError(
                f"c1 has {len(self.c1)} entries but c2 has {len(self.c2)}"
            )
        if len(self.c1) == 0:
            raise InvalidBucoInstanceError("instance must have at least one item")
        if any(x <= 0 for x in self.c1) or any(x <= 0 for x in self.c2):
            raise InvalidBucoInstanceError("all entries of c1 and c2 must be positive")

    @property
    def n(self) -> int:
        return len(self.c1)


def buco_value(inst: BucoInstance, x: Sequence[int]) -> ValueVector:
    """Value vector ``(-c1.x, c2.x)`` of a 0/1 solution."""
    if len(x) != inst.n:
        raise LengthMismatchError(f"solution has {len(x)} bits, expected {inst.n}")
    f1 = -sum(c for c, bit in zip(inst.c1, x) if bit)
    f2 = sum(c for c, bit in zip(inst.c2, x) if bit)
    return ValueVector(f1, Fraction(f2))


def buco_brute(inst: BucoInstance) -> ParetoFront:
    """Non-dominated set by enumerating all ``2**n`` solutions."""
    if inst.n > BRUTE_MAX_ITEMS:
        raise TooLargeError(f"n={inst.n} exceeds the enumeration cap of {BRUTE_MAX_ITEMS}")
    c1, c2 = inst.c1, inst.c2
    points: set[tuple[int, int]] = {(0, 0)}
    s1 = 0
    s2 = 0
    gray = 0
    for i in range(1, 1 << inst.n):
        nxt = i ^ (i >> 1)
        bit = (gray ^ nxt).bit_length() - 1
        sign = 1 if nxt >> bit & 1 else -1
        s1 += sign * c1[bit]
        s2 += sign * c2[bit]
        gray = nxt
        points.add((-s1, s2))
    return nondominated_filter(ValueVector(f1, Fraction(f2)) for f1, f2 in points)


def buco_dp(inst: BucoInstance) -> ParetoFront:
    """Non-dominated set via a dynamic program over achievable c2 sums.

    For every achievable weight the maximum total value is kept; the
    resulting candidate points are then dominance-filtered.
    """
    total_weight = sum(inst.c2)
    if total_weight > DP_MAX_WEIGHT:
        raise TooLargeError(f"sum(c2)={total_weight} exceeds the DP cap of {DP_MAX_WEIGHT}")
    best: list[int | None] = [None] * (total_weight + 1)
    best[0] = 0
    for value, weight in zip(inst.c1, inst.c2):
        for w in range(total_weight, weight - 1, -1):
            prev = best[w - weight]
            if prev is None:
                continue
            cand = prev + value
            if best[w] is None or cand > best[w]:
                best[w] = cand
    return nondominated_filter(
        ValueVector(-value, Fraction(w)) for w, value in enumerate(best) if value is not None
    )


def buco_to_dict(inst: BucoInstance) -> dict:
    return {"c1": list(inst.c1), "c2": list(inst.c2)}


def buco_from_dict(data: dict) -> BucoInstance:
    return BucoInstance(tuple(data["c1"]), tuple(data["c2"]))
