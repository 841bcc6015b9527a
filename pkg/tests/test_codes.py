import random

import pytest

from mastermind import (
    DimensionMismatchError,
    InvalidInstanceError,
    color_matches,
    exact_matches,
    perfect_rating,
    rate,
)
from mastermind.codes import check_code, check_rating, rating_from_doc, rating_to_doc

from conftest import oracle_color_by_permutation, random_code


def test_exact_matches_examples():
    assert exact_matches((0, 1, 2, 3), (4, 4, 1, 1)) == 0
    assert exact_matches((0, 1, 2, 3), (1, 2, 0, 3)) == 1
    assert exact_matches((0, 1, 2, 3), (0, 1, 2, 3)) == 4


def test_color_matches_examples():
    assert color_matches((0, 1, 2, 3), (4, 4, 1, 1)) == 1
    assert color_matches((0, 1, 2, 3), (1, 2, 0, 3)) == 4
    assert color_matches((5, 5, 5), (5, 5, 5)) == 3


def test_rate_examples():
    assert rate((0, 1, 2, 3), (3, 2, 2, 4), "full") == (1, 1)
    assert rate((0, 1, 2, 3), (5, 5, 3, 4), "full") == (0, 1)
    assert rate((0, 1, 2, 3), (0, 1, 2, 3), "full") == (4, 0)
    assert rate((0, 1, 2, 3), (4, 4, 1, 1), "black") == 0
    assert rate((0, 1, 2, 3), (4, 4, 1, 1), "white") == 1


def test_rate_unknown_variant():
    with pytest.raises(InvalidInstanceError):
        rate((0,), (0,), "grey")


def test_dimension_mismatch_is_an_error():
    with pytest.raises(DimensionMismatchError):
        exact_matches((0, 1), (0, 1, 2))
    with pytest.raises(DimensionMismatchError):
        color_matches((0,), ())
    with pytest.raises(DimensionMismatchError):
        rate((0, 1), (0,), "full")


def test_symmetry_and_ordering_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 7)
        c = rng.randint(1, 5)
        x, y = random_code(rng, n, c), random_code(rng, n, c)
        a, b = exact_matches(x, y), color_matches(x, y)
        assert exact_matches(y, x) == a
        assert color_matches(y, x) == b
        assert 0 <= a <= b <= n


def test_color_matches_equals_permutation_maximum_exhaustive():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(1, 5)
        c = rng.randint(1, 4)
        x, y = random_code(rng, n, c), random_code(rng, n, c)
        assert color_matches(x, y) == oracle_color_by_permutation(x, y)


def test_self_rating_is_perfect():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 6)
        c = rng.randint(1, 5)
        x = random_code(rng, n, c)
        for variant in ("full", "black", "white"):
            assert rate(x, x, variant) == perfect_rating(n, variant)


def _metric_axioms_hold(d, points):
    for x in points:
        if d(x, x) != 0:
            return False
    for x in points:
        for y in points:
            if (d(x, y) == 0) != (x == y):
                return False
            if d(x, y) != d(y, x):
                return False
    for x in points:
        for y in points:
            for z in points:
                if d(x, z) > d(x, y) + d(y, z):
                    return False
    return True


def test_metric_axioms_on_random_triples():
    rng = random.Random(14)
    for _ in range(400):
        n = rng.randint(1, 7)
        c = rng.randint(1, 4)
        triple = [random_code(rng, n, c) for _ in range(3)]
        assert _metric_axioms_hold(lambda a, b: n - exact_matches(a, b), triple)
        sorted_triple = [tuple(sorted(x)) for x in triple]
        assert _metric_axioms_hold(lambda a, b: n - color_matches(a, b), sorted_triple)


def test_check_code_bounds():
    assert check_code([0, 1], 2, 3) == (0, 1)
    with pytest.raises(DimensionMismatchError):
        check_code([0, 1, 2], 2, 3)
    with pytest.raises(InvalidInstanceError):
        check_code([0, 3], 2, 3)
    with pytest.raises(InvalidInstanceError):
        check_code([0, -1], 2, 3)


def test_check_rating_bounds():
    assert check_rating((2, 2), 4, "full") == (2, 2)
    with pytest.raises(InvalidInstanceError):
        check_rating((3, 2), 4, "full")
    with pytest.raises(InvalidInstanceError):
        check_rating((-1, 0), 4, "full")
    with pytest.raises(InvalidInstanceError):
        check_rating(5, 4, "black")
    with pytest.raises(InvalidInstanceError):
        check_rating((1, 1), 4, "black")


def test_rating_doc_round_trip():
    assert rating_to_doc((1, 3), "full") == {"black": 1, "white": 3}
    assert rating_to_doc(2, "black") == 2
    assert rating_from_doc({"black": 1, "white": 3}, 4, "full") == (1, 3)
    assert rating_from_doc(2, 4, "white") == 2
    with pytest.raises(InvalidInstanceError):
        rating_from_doc({"black": 1}, 4, "full")
    with pytest.raises(InvalidInstanceError):
        rating_from_doc((1, 3), 4, "black")
