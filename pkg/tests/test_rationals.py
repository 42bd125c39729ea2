from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hvlab.errors import ParseError
from hvlab.rationals import as_rational, format_rational, parse_rational

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


def test_exact_fraction_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_canonical_form_on_construction():
    q = Fraction(2, 4)
    assert (q.numerator, q.denominator) == (1, 2)


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


@given(rationals, rationals, rationals)
def test_field_axioms_hold_exactly(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


@given(rationals)
def test_literal_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_literal_syntax():
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("7") == 7
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(5)) == "5"


@pytest.mark.parametrize("bad", ["", "1/2/3", "1.5", "a", "1/-2", "--1"])
def test_bad_literals_rejected(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_zero_denominator_rejected():
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
