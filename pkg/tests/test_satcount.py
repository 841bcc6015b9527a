import random

import pytest

from mastermind import BudgetExceededError, CnfFormula, count_sat, enumerate_models, parse_dimacs

from conftest import (
    REFERENCE_DIMACS,
    REFERENCE_MODELS,
    oracle_count_models,
    oracle_models,
    random_formula_dimacs,
)


def test_reference_formula_has_ten_models():
    f = parse_dimacs(REFERENCE_DIMACS)
    assert count_sat(f) == 10
    assert enumerate_models(f) == REFERENCE_MODELS


def test_single_clause_counts():
    f = parse_dimacs("p cnf 3 1\n1 2 3 0")
    assert count_sat(f) == 7
    models = enumerate_models(f)
    assert len(models) == 7
    assert (False, False, False) not in models


def test_two_clauses():
    f = parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 2 3 0")
    assert count_sat(f) == 6


def test_unsatisfiable_all_sign_patterns():
    lines = ["p cnf 3 8"]
    for bits in range(8):
        lits = [(v + 1) if (bits >> v) & 1 else -(v + 1) for v in range(3)]
        lines.append(" ".join(map(str, lits)) + " 0")
    f = parse_dimacs("\n".join(lines))
    assert count_sat(f) == 0
    assert enumerate_models(f) == []


def test_models_are_sorted_unique_and_satisfying():
    rng = random.Random(21)
    for _ in range(60):
        f = parse_dimacs(random_formula_dimacs(rng, rng.randint(3, 5), rng.randint(1, 4)))
        models = enumerate_models(f)
        assert models == sorted(set(models))
        assert all(f.evaluate(m) for m in models)
        assert count_sat(f) == len(models) == oracle_count_models(f.v, f.clauses)
        assert models == oracle_models(f.v, f.clauses)


def test_adding_a_clause_never_increases_count():
    rng = random.Random(22)
    for _ in range(40):
        v = rng.randint(3, 5)
        f = parse_dimacs(random_formula_dimacs(rng, v, rng.randint(1, 3)))
        extra_vars = rng.sample(range(v), 3)
        extra = tuple((var, rng.random() < 0.5) for var in extra_vars)
        bigger = CnfFormula(v, f.clauses + (extra,))
        assert count_sat(bigger) <= count_sat(f)
        assert count_sat(f) <= 2**v


def test_variable_cap():
    clauses = (((0, True), (1, True), (2, True)),)
    with pytest.raises(BudgetExceededError):
        count_sat(CnfFormula(27, clauses))
