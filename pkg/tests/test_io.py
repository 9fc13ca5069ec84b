import json

import pytest
from hypothesis import given, strategies as st

from tategb.arith import format_rational
from tategb.io import ParseError, load_problem, parse_polynomial
from tategb.poly import format_polynomial

from helpers import R2, R3, polynomials, rationals


def test_parse_examples():
    x, y = R2.gens()
    assert parse_polynomial("x - 7*y", R2) == x - 7 * y
    assert parse_polynomial("0", R2).is_zero()
    assert parse_polynomial("(x+y)^1*1 - y", R2) == x
    assert parse_polynomial("  -(x + y)^2 ", R2) == -(x + y) ** 2
    assert parse_polynomial("3/6*x", R2) == x / 2


@pytest.mark.parametrize(
    "src, pos",
    [("x + z", 4), ("x^", 2), ("x^1/2", 2), ("x $ y", 2), ("(x", 2), ("x y", 2), ("", 0), ("1/0*x", 0), ("2^3", 1)],
)
def test_parse_errors_carry_position(src, pos):
    with pytest.raises(ParseError) as e:
        parse_polynomial(src, R2)
    assert e.value.pos == pos


@given(polynomials(R3, max_terms=6, max_deg=4, lo=-2, hi=3))
def test_polynomial_round_trip(f):
    s = format_polynomial(f)
    assert parse_polynomial(s, R3) == f
    assert format_polynomial(parse_polynomial(s, R3)) == s


@given(st.lists(rationals, min_size=2, max_size=2))
def test_radii_round_trip(r):
    doc = {"prime": 7, "variables": ["x", "y"], "generators": ["x"], "log_radii": [format_rational(c) for c in r]}
    assert list(load_problem(json.dumps(doc)).log_radii) == r


def test_problem_schema():
    doc = {
        "prime": 7, "variables": ["x", "y"], "generators": ["x - 7*y", "y - 7*y^2"],
        "log_radii": ["0", "2"], "polyhedron_vertices": [["0", "1"], ["1", "0"]],
        "weight": ["-1", "0", "0"], "cap": "30", "tie_break": "lex", "f": "x^2",
    }
    prob = load_problem(doc)
    assert prob.log_radii == (0, 2) and prob.cap == 30 and prob.tie_break == "lex"
    assert str(prob.f) == "x^2" and len(prob.polyhedron_vertices) == 2


@pytest.mark.parametrize(
    "patch",
    [
        {"prime": "7"},
        {"variables": "xy"},
        {"generators": ["x +"]},
        {"log_radii": ["0"]},
        {"log_radii": [0.5, 1]},
        {"weight": ["-1", "0"]},
        {"tie_break": "revlex"},
        {"cap": "abc"},
    ],
)
def test_problem_rejects(patch):
    doc = {"prime": 7, "variables": ["x", "y"], "generators": ["x"]}
    doc.update(patch)
    with pytest.raises(ParseError):
        load_problem(doc)


def test_problem_missing_fields_and_bad_json():
    with pytest.raises(ParseError):
        load_problem({"prime": 7, "variables": ["x"]})
    with pytest.raises(ParseError):
        load_problem("{not json")


def test_non_prime_is_domain_error():
    with pytest.raises(ValueError) as e:
        load_problem({"prime": 91, "variables": ["x"], "generators": ["x"]})
    assert not isinstance(e.value, ParseError)
