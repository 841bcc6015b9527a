import pytest

from mastermind import ClauseRestrictionError, CnfFormula, DimacsParseError, parse_dimacs

from conftest import REFERENCE_DIMACS


def test_parse_reference_formula():
    f = parse_dimacs(REFERENCE_DIMACS)
    assert f.v == 4 and f.m == 3
    assert f.clauses == (
        ((0, True), (1, False), (2, True)),
        ((0, False), (1, True), (3, True)),
        ((1, True), (2, False), (3, False)),
    )


def test_parse_single_clause():
    f = parse_dimacs("p cnf 3 1\n1 2 3 0")
    assert f.v == 3 and f.clauses == (((0, True), (1, True), (2, True)),)


def test_repeated_variable_is_a_restriction_error():
    with pytest.raises(ClauseRestrictionError):
        parse_dimacs("p cnf 3 1\n1 1 2 0")


def test_comments_blank_lines_and_multiline_clauses():
    text = "c a comment\n\nc another\np cnf 4 2\n1 -2\n3 0\n-1 2 4 0\n"
    f = parse_dimacs(text)
    assert f.m == 2
    assert f.clauses[0] == ((0, True), (1, False), (2, True))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs("p cnf 3 1\n1 2 x 0")
    assert exc.value.line == 2
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs("p wrong 3 1\n1 2 3 0")
    assert exc.value.line == 1
    with pytest.raises(DimacsParseError):
        parse_dimacs("1 2 3 0")  # clause before header
    with pytest.raises(DimacsParseError):
        parse_dimacs("p cnf 3 2\n1 2 3 0")  # fewer clauses than declared
    with pytest.raises(DimacsParseError):
        parse_dimacs("p cnf 3 1\n1 2 3")  # missing terminator
    with pytest.raises(DimacsParseError):
        parse_dimacs("p cnf 2 1\n1 2 3 0")  # literal beyond declared variables
    with pytest.raises(DimacsParseError):
        parse_dimacs("")


def test_restriction_errors():
    with pytest.raises(ClauseRestrictionError):
        parse_dimacs("p cnf 3 0\n")  # no clauses
    with pytest.raises(ClauseRestrictionError):
        parse_dimacs("p cnf 4 1\n1 2 3 4 0")  # four literals
    with pytest.raises(ClauseRestrictionError):
        parse_dimacs("p cnf 3 1\n1 -1 2 0")  # same variable twice
    with pytest.raises(ClauseRestrictionError):
        parse_dimacs("p cnf 2 1\n1 2 0")  # two literals, and v < 3


def test_formula_invariants_apply_to_direct_construction():
    with pytest.raises(ClauseRestrictionError):
        CnfFormula(2, (((0, True), (1, True), (1, False)),))
    with pytest.raises(ClauseRestrictionError):
        CnfFormula(4, ())
    with pytest.raises(ClauseRestrictionError):
        CnfFormula(3, (((0, True), (1, True), (3, True)),))  # var out of range


def test_evaluate_and_dimacs_round_trip():
    f = parse_dimacs(REFERENCE_DIMACS)
    assert f.evaluate((True, True, True, True))
    assert not f.evaluate((True, False, True, True))
    assert parse_dimacs(f.to_dimacs()) == f
