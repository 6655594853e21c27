"""Polynomial grammar: accepted forms and diagnostic positions."""

import pytest

from germlab import PolynomialSyntaxError, Ring, parse_polynomial

R = Ring(("x", "y"))


@pytest.mark.parametrize(
    "text,same_as",
    [
        ("x^2 - 3/2*x*y + 1", "x^2 - 3/2 x y + 1"),
        ("2x y", "2*x*y"),
        ("-x + +y", "y - x"),
        ("(x + y)^2", "x^2 + 2*x*y + y^2"),
        ("x/2", "1/2*x"),
        ("3/2", "3/2"),
        ("x - - y", "x + y"),
    ],
)
def test_equivalent_spellings(text, same_as):
    assert parse_polynomial(text, R) == parse_polynomial(same_as, R)


def test_zero():
    assert parse_polynomial("0", R).is_zero()
    assert parse_polynomial("x - x", R).is_zero()


def test_malformed_exponent_position():
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial("x^", R)
    assert err.value.line == 1
    assert err.value.column == 2


def test_unknown_variable():
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial("x + q", R)
    assert err.value.column == 5


def test_multiline_position():
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial("x +\n  )", R)
    assert err.value.line == 2
    assert err.value.column == 3


def test_division_by_polynomial_rejected():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x / y", R)


def test_unbalanced_paren():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("(x + 1", R)


def test_roundtrip_to_str():
    q = parse_polynomial("x^2 - 3/2*x*y + 1", R)
    assert parse_polynomial(q.to_str(), R) == q
    assert q.to_str() == "x^2 - 3/2*x*y + 1"
