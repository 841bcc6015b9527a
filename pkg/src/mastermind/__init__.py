"""Mastermind analysis toolkit.

Rating arithmetic for the full / black-peg / white-peg game variants, exact
solution-space counting and enumeration, solution-preserving compilers from
3-CNF formulas to Mastermind query sets, minimax guess suggestion, an
adaptive codemaker, live game sessions, and a loopback HTTP service.
"""

from .codes import (
    Code,
    VARIANTS,
    color_matches,
    exact_matches,
    perfect_rating,
    rate,
)
from .cnf import CnfFormula, parse_dimacs
from .counting import (
    DEFAULT_BUDGET,
    Instance,
    Query,
    SolutionSet,
    count_solutions,
    enumerate_solutions,
    is_consistent,
    search_space_size,
)
from .errors import (
    BudgetExceededError,
    ClauseRestrictionError,
    DimacsParseError,
    DimensionMismatchError,
    InconsistentCodeError,
    InvalidInstanceError,
    MastermindError,
    NoCandidateError,
    NotAModelError,
    SessionFinishedError,
    UnknownSessionError,
    UnsupportedVariantError,
)
from .reductions import (
    ReductionLayout,
    assignment_to_code,
    code_to_assignment,
    extend_assignment,
    lift_color,
    reduce_to,
    reduce_to_black2,
    reduce_to_full2,
    reduce_to_white,
)
from .satcount import count_sat, enumerate_models
from .sessions import GameSession, SessionStore
from .strategy import (
    adaptive_rating,
    candidate_codes,
    chvatal_bound,
    suggest_guess,
    worst_case_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClauseRestrictionError",
    "CnfFormula",
    "Code",
    "DEFAULT_BUDGET",
    "DimacsParseError",
    "DimensionMismatchError",
    "GameSession",
    "InconsistentCodeError",
    "Instance",
    "InvalidInstanceError",
    "MastermindError",
    "NoCandidateError",
    "NotAModelError",
    "Query",
    "ReductionLayout",
    "SessionFinishedError",
    "SessionStore",
    "SolutionSet",
    "UnknownSessionError",
    "UnsupportedVariantError",
    "VARIANTS",
    "adaptive_rating",
    "assignment_to_code",
    "candidate_codes",
    "chvatal_bound",
    "code_to_assignment",
    "color_matches",
    "count_sat",
    "count_solutions",
    "enumerate_models",
    "enumerate_solutions",
    "exact_matches",
    "extend_assignment",
    "is_consistent",
    "lift_color",
    "parse_dimacs",
    "perfect_rating",
    "rate",
    "reduce_to",
    "reduce_to_black2",
    "reduce_to_full2",
    "reduce_to_white",
    "search_space_size",
    "suggest_guess",
    "worst_case_partition",
]
