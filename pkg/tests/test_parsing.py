"""Coefficient expression parsing."""

from fractions import Fraction

import pytest

from rsckit import FieldElement, ParseError, as_field, parse_coeff

S2 = FieldElement.sqrt_int(2)
S3 = FieldElement.sqrt_int(3)


def test_basic_values():
    assert parse_coeff("0") == as_field(0)
    assert parse_coeff("-17") == as_field(-17)
    assert parse_coeff("3/4") == as_field(Fraction(3, 4))
    assert parse_coeff("sqrt(2)") == S2
    assert parse_coeff("sqrt(8)") == 2 * S2
    assert parse_coeff("sqrt(4)") == as_field(2)
    assert parse_coeff("sqrt(0)") == as_field(0)


def test_arithmetic_and_precedence():
    assert parse_coeff("1+2*3") == as_field(7)
    assert parse_coeff("(1+2)*3") == as_field(9)
    assert parse_coeff("1-2-3") == as_field(-4)
    assert parse_coeff("8/2/2") == as_field(2)
    assert parse_coeff("-sqrt(3)/3") == -S3 / 3
    assert parse_coeff("(3-sqrt(21))/2") == (3 - FieldElement.sqrt_int(21)) / 2
    assert parse_coeff("sqrt(2)*sqrt(3)") == FieldElement.sqrt_int(6)
    assert parse_coeff("--2") == as_field(2)


def test_whitespace_insensitive():
    assert parse_coeff(" ( 1 + sqrt( 2 ) ) / 2 ") == (1 + S2) / 2


def test_round_trip_through_str():
    for e in (as_field(Fraction(-3, 2)), (1 + S2) / 2, 2 * S3 - 1,
              (-S2 - FieldElement.sqrt_int(6)) / 2,
              1 + S2 + S3 + FieldElement.sqrt_int(6)):
        assert parse_coeff(str(e)) == e


def test_errors_carry_position():
    cases = {
        "": 0,
        "1++2": 2,
        "(1+2": 4,
        "2,3": 1,
        "sqrt(x)": 5,
    }
    for text, pos in cases.items():
        with pytest.raises(ParseError) as info:
            parse_coeff(text)
        assert info.value.position == pos
        assert f"(at position {pos})" in str(info.value)


def test_domain_errors():
    with pytest.raises(ParseError, match="negative"):
        parse_coeff("sqrt(-4)")
    with pytest.raises(ParseError, match="division by zero"):
        parse_coeff("1/0")
    with pytest.raises(ParseError, match="trailing"):
        parse_coeff("1 2")
