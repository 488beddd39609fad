"""DIMACS CNF reading for 3-CNF formulas."""

from __future__ import annotations

from .errors import MalformedCnfError
from .generators import CnfFormula


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text into a 3-CNF formula.

    Comment lines start with ``c``; the ``p cnf <vars> <clauses>`` header is
    required and the clause count must match.  Every clause must contain
    exactly three distinct literals.
    """
    num_vars = None
    num_clauses = None
    tokens: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise MalformedCnfError("duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise MalformedCnfError(f"bad problem line: {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedCnfError(f"bad problem line: {line!r}") from None
            continue
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError:
            raise MalformedCnfError(f"bad clause line: {line!r}") from None

    if num_vars is None or num_clauses is None:
        raise MalformedCnfError("missing 'p cnf' problem line")

    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            if len(current) != 3:
                raise MalformedCnfError(f"clause {current} must hold exactly 3 literals")
            clauses.append((current[0], current[1], current[2]))
            current = []
        else:
            current.append(tok)
    if current:
        raise MalformedCnfError("final clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise MalformedCnfError(f"header promises {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(cnf: CnfFormula) -> str:
    lines = [f"p cnf {cnf.num_vars} {cnf.num_clauses}"]
    lines.extend(" ".join(str(l) for l in clause) + " 0" for clause in cnf.clauses)
    return "\n".join(lines) + "\n"
