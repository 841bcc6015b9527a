"""Brute-force model counting for 3-CNF formulas.

Deliberately the dumbest possible implementation (check every assignment):
this module is the independent oracle that every solution-preservation test
of the instance compilers is judged against, so it must be simple enough to
trust at a glance.
"""

from __future__ import annotations

import itertools

from .cnf import CnfFormula
from .errors import BudgetExceededError

MAX_VARS = 26

Assignment = tuple[bool, ...]


def _check_size(formula: CnfFormula) -> None:
    if formula.v > MAX_VARS:
        raise BudgetExceededError(2**formula.v, 2**MAX_VARS, "assignment enumeration")


def count_sat(formula: CnfFormula) -> int:
    """Number of satisfying assignments, by enumerating all 2^v of them."""
    _check_size(formula)
    return sum(
        1
        for bits in itertools.product((False, True), repeat=formula.v)
        if formula.evaluate(bits)
    )


def enumerate_models(formula: CnfFormula) -> list[Assignment]:
    """All satisfying assignments, lexicographic with variable 0 most
    significant and False < True."""
    _check_size(formula)
    return [
        bits
        for bits in itertools.product((False, True), repeat=formula.v)
        if formula.evaluate(bits)
    ]
