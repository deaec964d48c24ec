"""Parsing round-trips for the shared expression grammar."""

from __future__ import annotations

import pytest
from hypothesis import given

from conftest import XY, XYZ, poly_strategy
from liefol import ParseError, Poly, format_poly, parse_field_coefficients, parse_polynomial
from liefol.expr import basis_names, format_field

X, Y = XY.vars()


def test_literals_and_precedence():
    assert parse_polynomial("1 + 2*3", XY) == Poly.constant(XY, 7)
    assert parse_polynomial("2^3", XY) == Poly.constant(XY, 8)
    assert parse_polynomial("-x^2", XY) == -(X**2)
    assert parse_polynomial("(x + y)^2", XY) == X**2 + 2 * X * Y + Y**2
    assert parse_polynomial("x - y - 1", XY) == X - Y - 1


def test_rational_literals():
    from fractions import Fraction

    assert parse_polynomial("3/2", XY) == Poly.constant(XY, Fraction(3, 2))
    assert parse_polynomial("1/2*x + 1/3", XY) == X * Fraction(1, 2) + Fraction(1, 3)


def test_unknown_name_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x + q", XY)


def test_negative_exponent_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x^-1", XY)


def test_unbalanced_parens():
    with pytest.raises(ParseError):
        parse_polynomial("(x + y", XY)
    with pytest.raises(ParseError):
        parse_polynomial("x + y)", XY)


def test_error_carries_position():
    try:
        parse_polynomial("x + ?", XY)
    except ParseError as err:
        assert err.position == 4
    else:  # pragma: no cover
        pytest.fail("expected a ParseError")


@given(poly_strategy(XY))
def test_print_parse_roundtrip(p):
    assert parse_polynomial(format_poly(p), XY) == p


@given(poly_strategy(XYZ, max_degree=2))
def test_print_parse_roundtrip_three_vars(p):
    assert parse_polynomial(format_poly(p), XYZ) == p


class TestFieldGrammar:
    def test_basis_names(self):
        assert basis_names(XY) == ("dx", "dy")

    def test_simple_field(self):
        coeffs = parse_field_coefficients("x*dx + y*dy", XY)
        assert coeffs == (X, Y)

    def test_positional_aliases(self):
        assert parse_field_coefficients("dx1 + x*dx2", XY) == (Poly.one(XY), X)

    def test_parenthesised_coefficients(self):
        coeffs = parse_field_coefficients("(y^2 - 1)*dy", XY)
        assert coeffs == (Poly.zero(XY), Y**2 - 1)

    def test_bare_basis_vector(self):
        assert parse_field_coefficients("dy", XY) == (Poly.zero(XY), Poly.one(XY))

    def test_minus_basis(self):
        assert parse_field_coefficients("-y*dx + x*dy", XY) == (-Y, X)

    def test_undeclared_basis_rejected(self):
        chart_x = __import__("liefol").Chart(("x",))
        with pytest.raises(ParseError):
            parse_field_coefficients("dx + dz", chart_x)

    def test_mixed_basis_product_rejected(self):
        with pytest.raises(ParseError):
            parse_field_coefficients("dx*dy", XY)

    def test_basis_power_rejected(self):
        with pytest.raises(ParseError):
            parse_field_coefficients("dx^2", XY)

    def test_no_basis_rejected(self):
        with pytest.raises(ParseError):
            parse_field_coefficients("x + y", XY)

    def test_format_field_roundtrip(self):
        coeffs = (X**2 - 1, -Y)
        text = format_field(coeffs, XY)
        assert parse_field_coefficients(text, XY) == coeffs
