"""Rational functions in t: arithmetic, parsing, printing."""

from fractions import Fraction

import pytest

from hankelpath.scalars import (RatFunc, ScalarParseError, T, scalar_div,
                                scalar_inv, scalar_parse, scalar_str)


def test_basic_arithmetic():
    assert (1 + T) * (2 + T) == scalar_parse("2+3*t+t^2")
    assert T * T - 1 == (T - 1) * (T + 1)
    assert (T + 1) - (T + 1) == 0
    assert T ** 3 == T * T * T


def test_division_exact_polynomial():
    # exact quotients come back as polynomials, not fractions
    q = scalar_div(T * T - 1, T - 1)
    assert q == T + 1
    assert scalar_str(q) == "1+t"


def test_inverse_and_true_division():
    inv = scalar_inv(1 + T)
    assert inv * (1 + T) == 1
    assert scalar_str(inv) == "(1)/(1+t)"
    assert scalar_div(1, 2) == Fraction(1, 2)


def test_specialize():
    f = (T * T - 1) / (T - 1)
    assert isinstance(f, RatFunc)
    assert f.specialize(Fraction(1, 2)) == Fraction(3, 2)
    assert f.specialize(3) == 4


@pytest.mark.parametrize("text,expected", [
    ("-12", "-12"),
    ("3/4", "3/4"),
    ("1+t", "1+t"),
    ("t^2-2*t", "-2*t+t^2"),
    ("(1+t)/(1-t)", "(-1-t)/(-1+t)"),
])
def test_parse_print_roundtrip(text, expected):
    value = scalar_parse(text)
    printed = scalar_str(value)
    assert printed == expected
    assert scalar_parse(printed) == value


def test_parse_scalars_without_t_stay_numeric():
    assert scalar_parse("7") == 7
    assert isinstance(scalar_parse("7"), int)
    assert scalar_parse("3/4") == Fraction(3, 4)


@pytest.mark.parametrize("bad", ["", "t +", "1//2", "x", "(1+t", "t^t"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ScalarParseError):
        scalar_parse(bad)


def test_equality_across_representations():
    # int, Fraction and constant RatFunc compare equal when values agree
    assert scalar_parse("2") == Fraction(2, 1)
    assert (T + 2) - T == 2
