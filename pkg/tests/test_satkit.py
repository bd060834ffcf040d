import pytest
from hypothesis import given, strategies as st

from strpart.satkit import (Formula3SAT3, FormulaError, gen_3sat3, parse_assignment,
                            parse_formula, render_assignment, require_3sat3,
                            solve_sat_bruteforce, validate_3sat3)

EXAMPLE = Formula3SAT3.from_ints(2, [[1, 2], [1, 2], [-1, -2]])


def test_example_formula():
    assert validate_3sat3(EXAMPLE) == []
    assert EXAMPLE.occurrences(1) == ([(1, 1), (2, 1)], [(3, 1)])
    assert solve_sat_bruteforce(EXAMPLE) == (False, True)
    assert EXAMPLE.first_falsified((True, True)) == 3


def test_render_parse_round_trip():
    text = EXAMPLE.render()
    assert text == "p sat3 2 3\n1 2 0\n1 2 0\n-1 -2 0\n"
    assert parse_formula(text) == EXAMPLE


@given(st.integers(2, 8), st.integers(0, 10_000))
def test_generator_valid_and_deterministic(n, seed):
    f = gen_3sat3(n, seed)
    assert validate_3sat3(f) == []
    assert gen_3sat3(n, seed) == f
    assert parse_formula(f.render()) == f


@pytest.mark.parametrize("ints,problem", [
    ([[1, 2], [1, 2]], "0 times negated"),
    ([[1, 2], [1, 2], [-1, -2], [1]], "clause 4 has 1 literals"),
    ([[1, 1], [1, 2], [-1, -2], [2]], "occurs twice"),
])
def test_validation_reports(ints, problem):
    problems = validate_3sat3(Formula3SAT3.from_ints(2, ints))
    assert any(problem in p for p in problems), problems
    with pytest.raises(FormulaError):
        require_3sat3(Formula3SAT3.from_ints(2, ints))


@pytest.mark.parametrize("text", [
    "1 2 0\n",
    "p cnf 2 1\n1 2 0\n",
    "p sat3 2 2\n1 2 0\n",
    "p sat3 2 1\n1 x 0\n",
    "p sat3 2 1\n1 2\n",
    "p sat3 2 1\n1 3 0\n",
])
def test_parse_errors(text):
    with pytest.raises(FormulaError):
        parse_formula(text)


def test_bruteforce_unsat_and_limit():
    f = gen_3sat3(4, 155)
    assert solve_sat_bruteforce(f) is None
    with pytest.raises(ValueError):
        solve_sat_bruteforce(Formula3SAT3(30, ()))


def test_assignment_formats():
    assert parse_assignment("1 -2 3", 3) == (True, False, True)
    assert parse_assignment("101", 3) == (True, False, True)
    assert render_assignment((True, False)) == "1 -2"
    with pytest.raises(FormulaError):
        parse_assignment("1", 2)


def test_relabel():
    f = EXAMPLE.relabel([2, 1])
    assert f.to_ints() == [[2, 1], [2, 1], [-2, -1]]
