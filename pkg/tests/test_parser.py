from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from planecurves.errors import PolySyntaxError
from planecurves.parser import parse_poly, render
from planecurves.poly import MultiPoly, homogeneous_degree

monomials = st.tuples(*(st.integers(0, 4) for _ in range(3)))
coeffs = st.one_of(
    st.integers(-50, 50), st.fractions(min_value=-9, max_value=9, max_denominator=7)
)
polys = st.dictionaries(monomials, coeffs, max_size=8).map(MultiPoly)


def test_prop1_equation():
    p = parse_poly("(y^2*z - x^3)^2 - x^3*y^3")
    assert len(p) == 4
    assert homogeneous_degree(p) == 6
    assert p == parse_poly("y^4*z^2 - 2*x^3*y^2*z + x^6 - x^3*y^3")


def test_simple_sum():
    p = parse_poly("x + y")
    assert len(p) == 2 and homogeneous_degree(p) == 1


def test_whitespace_ignored():
    assert parse_poly(" x^ 2 *y ") == parse_poly("x^2*y")


@pytest.mark.parametrize(
    "text, pos",
    [
        ("x + ", 4),
        ("2x", 1),  # implicit multiplication
        ("x*(y + z", 8),
        ("x^y", 2),
        ("x ? y", 2),
        ("x / y", 2),
        ("", 0),
    ],
)
def test_syntax_errors(text, pos):
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly(text)
    assert exc.value.position == pos


def test_leading_sign_and_rationals():
    assert parse_poly("-x + 1/2*y") == MultiPoly({(1, 0, 0): -1, (0, 1, 0): Fraction(1, 2)})


def test_render():
    assert render(parse_poly("x^2 - 2*x*y + 3")) == "x^2 - 2*x*y + 3"
    assert render(MultiPoly()) == "0"


@settings(max_examples=500)
@given(polys)
def test_round_trip(p):
    assert parse_poly(render(p)) == p
