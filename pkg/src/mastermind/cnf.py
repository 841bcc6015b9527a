"""3-CNF formulas and DIMACS CNF ingestion.

Only the fragment the instance compilers accept is admitted: every clause
has exactly three literals over three mutually distinct variables, at least
one clause, at least three variables. Formulas outside the fragment are
rejected, never normalized.

DIMACS conventions: optional leading comment lines starting with ``c``, one
header ``p cnf <vars> <clauses>``, then clauses as signed 1-based variable
numbers terminated by ``0`` (a clause may span lines). Variables are 0-based
internally; a literal is a ``(variable, positive)`` pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClauseRestrictionError, DimacsParseError

Literal = tuple[int, bool]
Clause = tuple[Literal, Literal, Literal]


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula: variable count plus clauses of (variable, positive)."""

    v: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "clauses",
            tuple(tuple((var, bool(pos)) for var, pos in clause) for clause in self.clauses),
        )
        if self.v < 3:
            raise ClauseRestrictionError(f"at least 3 variables required, got {self.v}")
        if not self.clauses:
            raise ClauseRestrictionError("at least one clause required")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ClauseRestrictionError(
                    f"clause {clause} must have exactly 3 literals"
                )
            vars_ = [var for var, _ in clause]
            if len(set(vars_)) != 3:
                raise ClauseRestrictionError(
                    f"clause {clause} must use three mutually distinct variables"
                )
            for var in vars_:
                if not 0 <= var < self.v:
                    raise ClauseRestrictionError(
                        f"clause {clause} references variable {var} outside [0, {self.v})"
                    )

    @property
    def m(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment) -> bool:
        """True iff the assignment (sequence of v booleans) satisfies every clause."""
        if len(assignment) != self.v:
            raise ClauseRestrictionError(
                f"assignment has {len(assignment)} values, formula has {self.v} variables"
            )
        return all(
            any(bool(assignment[var]) == pos for var, pos in clause)
            for clause in self.clauses
        )

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.v} {self.m}"]
        for clause in self.clauses:
            lines.append(
                " ".join(str(var + 1 if pos else -(var + 1)) for var, pos in clause) + " 0"
            )
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text into a validated CnfFormula.

    Raises DimacsParseError (with a line number) for malformed input and
    ClauseRestrictionError for well-formed input outside the accepted
    3-distinct-variables fragment.
    """
    header = None
    tokens: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if header is not None:
                raise DimacsParseError("duplicate header", lineno)
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsParseError(f"malformed header {stripped!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]), lineno)
            except ValueError:
                raise DimacsParseError(f"malformed header {stripped!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsParseError(f"negative counts in header {stripped!r}", lineno)
            continue
        if header is None:
            raise DimacsParseError(f"clause data before 'p cnf' header: {stripped!r}", lineno)
        for tok in stripped.split():
            try:
                tokens.append((int(tok), lineno))
            except ValueError:
                raise DimacsParseError(f"expected an integer, got {tok!r}", lineno) from None

    if header is None:
        raise DimacsParseError("missing 'p cnf' header")
    num_vars, num_clauses, header_line = header
    if num_clauses == 0:
        raise ClauseRestrictionError("formula must have at least one clause")

    clauses: list[list[Literal]] = []
    current: list[Literal] = []
    for value, lineno in tokens:
        if value == 0:
            if len(current) != 3:
                raise ClauseRestrictionError(
                    f"line {lineno}: clause has {len(current)} literals, expected exactly 3"
                )
            if len({var for var, _ in current}) != 3:
                raise ClauseRestrictionError(
                    f"line {lineno}: clause must use three mutually distinct variables"
                )
            clauses.append(current)
            current = []
            continue
        var = abs(value) - 1
        if var >= num_vars:
            raise DimacsParseError(
                f"literal {value} references variable beyond the declared {num_vars}", lineno
            )
        current.append((var, value > 0))
    if current:
        raise DimacsParseError("last clause is not terminated by 0", tokens[-1][1])
    if len(clauses) != num_clauses:
        raise DimacsParseError(
            f"header declares {num_clauses} clauses but {len(clauses)} were given",
            header_line,
        )
    return CnfFormula(num_vars, tuple(tuple(cl) for cl in clauses))
