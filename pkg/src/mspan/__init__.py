"""Exact toolkit for the biobjective graph spanner problem.

Instances carry an integer edge cost and a positive integer edge length; a
spanner is an edge subset that keeps the graph connected (undirected) or
preserves all reachability (directed).  The toolkit evaluates spanners,
enumerates exact non-dominated sets and extreme points at desk scale,
constructs three benchmark instance families and machine-checks their
structural claims.
"""

__version__ = "0.1.0"

from .buco import BucoInstance, buco_brute, buco_dp, buco_value
from .errors import (
    BudgetExceededError,
    InfeasibleSpannerError,
    InvalidBucoInstanceError,
    InvalidInstanceError,
    LengthMismatchError,
    MalformedCnfError,
    MspanError,
    NonIntegralF2Error,
    NotUnweightedError,
    NTooSmallError,
    TooLargeError,
    UnsatisfyingAssignmentError,
)
from .extreme import (
    ExtremeCertificate,
    Lambda,
    extreme_dichotomic,
    extreme_from_front,
    weighted_sum_min,
)
from .generators import (
    BucoReductionMetadata,
    CaiMetadata,
    CnfFormula,
    GraphBuilder,
    filter_buco_front,
    force_edge,
    gen_cai,
    gen_from_buco,
    gen_intractable,
    spanner_from_buco_solution,
    witness_spanner,
)
from .graphs import (
    DistanceMap,
    Edge,
    InstanceIssue,
    UnionFind,
    WeightedGraph,
    instance_from_dict,
    instance_to_dict,
    reachable_pairs,
    require_valid,
    shortest_distances,
    validate_instance,
)
from .objectives import Spanner, ValueVector, dominates, evaluate, is_spanner
from .pareto import DEFAULT_BUDGET, ParetoFront, enumerate_front, nondominated_filter
from .verifiers import (
    Report,
    verify_buco_reduction,
    verify_cai,
    verify_intractable,
    verify_unweighted_bound,
)

__all__ = [
    "BucoInstance",
    "BucoReductionMetadata",
    "BudgetExceededError",
    "CaiMetadata",
    "CnfFormula",
    "DEFAULT_BUDGET",
    "DistanceMap",
    "Edge",
    "ExtremeCertificate",
    "GraphBuilder",
    "InfeasibleSpannerError",
    "InstanceIssue",
    "InvalidBucoInstanceError",
    "InvalidInstanceError",
    "Lambda",
    "LengthMismatchError",
    "MalformedCnfError",
    "MspanError",
    "NTooSmallError",
    "NonIntegralF2Error",
    "NotUnweightedError",
    "ParetoFront",
    "Report",
    "Spanner",
    "TooLargeError",
    "UnionFind",
    "UnsatisfyingAssignmentError",
    "ValueVector",
    "WeightedGraph",
    "buco_brute",
    "buco_dp",
    "buco_value",
    "dominates",
    "enumerate_front",
    "evaluate",
    "extreme_dichotomic",
    "extreme_from_front",
    "filter_buco_front",
    "force_edge",
    "gen_cai",
    "gen_from_buco",
    "gen_intractable",
    "instance_from_dict",
    "instance_to_dict",
    "is_spanner",
    "nondominated_filter",
    "reachable_pairs",
    "require_valid",
    "shortest_distances",
    "spanner_from_buco_solution",
    "validate_instance",
    "verify_buco_reduction",
    "verify_cai",
    "verify_intractable",
    "verify_unweighted_bound",
    "weighted_sum_min",
    "witness_spanner",
]
