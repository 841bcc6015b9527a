"""Exception hierarchy for the toolkit.

Everything raised on purpose derives from MastermindError so callers (CLI,
service) can map failures to exit codes / HTTP statuses in one place.
"""

from __future__ import annotations


class MastermindError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(MastermindError):
    """Two codes (or a code and an instance) disagree on length or color bound."""


class InvalidInstanceError(MastermindError):
    """An instance, query, rating, or code violates its invariants."""


class BudgetExceededError(MastermindError):
    """The search space is too large for the enumeration budget.

    ``required`` is the number of candidates the search would have to visit;
    the operation runs only when ``required < budget``.
    """

    def __init__(self, required: int, budget: int, detail: str = "search space"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{detail} needs {required} enumerated candidates but the budget is "
            f"{budget}; rerun with a budget above {required}"
        )


class DimacsParseError(MastermindError):
    """Malformed DIMACS input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClauseRestrictionError(MastermindError):
    """Formula is well-formed DIMACS but outside the accepted 3-CNF fragment."""


class UnsupportedVariantError(MastermindError):
    """Operation is not defined for this game variant."""


class NotAModelError(MastermindError):
    """The given assignment does not satisfy the formula."""


class InconsistentCodeError(MastermindError):
    """The given code is not a solution of the instance it claims to solve."""


class NoCandidateError(MastermindError):
    """No code is consistent with the transcript (empty candidate set)."""


class UnknownSessionError(MastermindError):
    """No session with the given id."""


class SessionFinishedError(MastermindError):
    """The session is already solved or contradicted."""
