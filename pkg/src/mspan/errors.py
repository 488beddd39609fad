"""Error types shared across the toolkit.

Every error carries a stable ``code`` string; the same codes appear verbatim
in service error responses and CLI diagnostics.
"""

from __future__ import annotations


class MspanError(Exception):
    """Base class for all toolkit errors."""

    code = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidInstanceError(MspanError):
    """A graph instance violates its structural invariants."""

    code = "INVALID_INSTANCE"

    def __init__(self, issues):
        self.issues = list(issues)
        detail = "; ".join(f"{i.code}: {i.message}" for i in self.issues)
        super().__init__(f"invalid instance: {detail}")


class BudgetExceededError(MspanError):
    code = "BUDGET_EXCEEDED"


class InfeasibleSpannerError(MspanError):
    code = "INFEASIBLE_SPANNER"


class TooLargeError(MspanError):
    code = "TOO_LARGE"


class LengthMismatchError(MspanError):
    code = "LENGTH_MISMATCH"


class InvalidBucoInstanceError(MspanError):
    code = "INVALID_BUCO_INSTANCE"


class NTooSmallError(MspanError):
    code = "N_TOO_SMALL"


class MalformedCnfError(MspanError):
    code = "MALFORMED_CNF"


class UnsatisfyingAssignmentError(MspanError):
    code = "UNSATISFYING_ASSIGNMENT"


class NonIntegralF2Error(MspanError):
    code = "NONINTEGRAL_F2"


class NotUnweightedError(MspanError):
    code = "NOT_UNWEIGHTED"
