"""Shared fixtures and independent oracles.

The oracles here deliberately reimplement the semantics from scratch
(ratings by definition, solution sets by filtering the whole space, model
sets by evaluating every assignment) so that package code is never checked
against itself.
"""

from __future__ import annotations

import itertools
import random

import pytest

# Classic game transcript: secret, then (guess, full rating) per turn.
TABLE_GAME_SECRET = (0, 1, 2, 3)
TABLE_GAME = [
    ((4, 4, 1, 1), (0, 1)),
    ((3, 2, 2, 4), (1, 1)),
    ((0, 3, 0, 4), (1, 1)),
    ((5, 5, 3, 4), (0, 1)),
    ((1, 2, 0, 3), (1, 3)),
    ((0, 1, 2, 3), (4, 0)),
]

# random.Random(597) draws (0, 1, 2, 3) for n=4, c=6.
SEED_0123 = 597

# (x or not y or z) and (not x or y or w) and (y or not z or not w)
REFERENCE_DIMACS = "p cnf 4 3\n1 -2 3 0\n-1 2 4 0\n2 -3 -4 0\n"

# Its ten models, frozen from the published worked example (T first there;
# stored here in enumeration order: variable 0 most significant, F < T).
REFERENCE_MODELS = [
    (False, False, False, False),
    (False, False, False, True),
    (False, False, True, False),
    (False, True, True, False),
    (False, True, True, True),
    (True, False, False, True),
    (True, True, False, False),
    (True, True, False, True),
    (True, True, True, False),
    (True, True, True, True),
]


def oracle_exact(x, y):
    assert len(x) == len(y)
    return sum(1 for a, b in zip(x, y) if a == b)


def oracle_color_by_permutation(x, y):
    """Color overlap as the best exact-match count over reorderings of y.

    This is the defining form; only usable for small codes.
    """
    return max(oracle_exact(x, perm) for perm in itertools.permutations(y))


def oracle_color_by_counts(x, y):
    counts = {}
    for a in x:
        counts[a] = counts.get(a, 0) + 1
    overlap = 0
    for b in y:
        if counts.get(b, 0) > 0:
            counts[b] -= 1
            overlap += 1
    return overlap


def oracle_rate(secret, guess, variant):
    if variant == "black":
        return oracle_exact(secret, guess)
    if variant == "white":
        return oracle_color_by_counts(secret, guess)
    black = oracle_exact(secret, guess)
    return (black, oracle_color_by_counts(secret, guess) - black)


def oracle_solutions(n, c, variant, queries):
    """Filter the whole space: ordered codes, or sorted multisets for white."""
    if variant == "white":
        space = itertools.combinations_with_replacement(range(c), n)
    else:
        space = itertools.product(range(c), repeat=n)
    return [
        code
        for code in space
        if all(oracle_rate(code, g, variant) == r for g, r in queries)
    ]


def oracle_count_models(v, clauses):
    """Model count by evaluating all 2^v assignments; clauses are
    ((var, positive), ...) triples."""
    return len(oracle_models(v, clauses))


def oracle_models(v, clauses):
    return [
        bits
        for bits in itertools.product((False, True), repeat=v)
        if all(any(bits[var] == pos for var, pos in clause) for clause in clauses)
    ]


def random_formula_dimacs(rng: random.Random, v: int, m: int) -> str:
    lines = [f"p cnf {v} {m}"]
    for _ in range(m):
        variables = rng.sample(range(1, v + 1), 3)
        lits = [var if rng.random() < 0.5 else -var for var in variables]
        lines.append(" ".join(map(str, lits)) + " 0")
    return "\n".join(lines) + "\n"


def random_code(rng: random.Random, n: int, c: int):
    return tuple(rng.randrange(c) for _ in range(n))


@pytest.fixture
def reference_formula():
    from mastermind import parse_dimacs

    return parse_dimacs(REFERENCE_DIMACS)
