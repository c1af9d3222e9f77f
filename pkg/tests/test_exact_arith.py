"""
Tests for scalars, Laurent polynomials, rational functions, multivariate
polynomials and exact linear algebra.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, Rational, Symbol, limit

from degenlab.arith.laurent import LaurentPoly, RationalFunction, limit_at_zero, valuation_at_zero
from degenlab.arith.linalg import (
    determinant,
    fraction_matrix,
    inverse,
    nullity,
    rank,
    row_space_basis,
)
from degenlab.arith.polynomials import MultiPoly, constant_ratio, polynomial_ring
from degenlab.arith.scalars import format_scalar, parse_scalar
from degenlab.errors import ParseError, RaggedInput, SingularMatrix, ZeroDenominator, ZeroInput

T = Symbol("t")

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=5)
laurent_polys = st.dictionaries(st.integers(min_value=-3, max_value=3), small_fractions,
                                max_size=4).map(LaurentPoly)
small_matrices = st.integers(min_value=1, max_value=3).flatmap(
    lambda cols: st.lists(st.lists(st.integers(min_value=-3, max_value=3), min_size=cols, max_size=cols),
                          min_size=1, max_size=3))


# Scalars

def test_parse_scalar_forms():
    assert parse_scalar("1/2") == Fraction(1, 2)
    assert parse_scalar(" -3 ") == Fraction(-3)
    assert parse_scalar(4) == Fraction(4)
    assert parse_scalar(Fraction(2, 6)) == Fraction(1, 3)


@pytest.mark.parametrize("bad", ["abc", "1/0", "", True, 0.5, None])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_format_scalar():
    assert format_scalar(Fraction(6, 4)) == "3/2"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(Fraction(-1, 3)) == "-1/3"


# Laurent polynomials

def test_parse_witness_entry():
    p = LaurentPoly.parse("1 - 2*t^-1")
    assert p.coefficients == {0: Fraction(1), -1: Fraction(-2)}
    assert str(p) == "1 - 2*t^-1"
    assert p.valuation() == -1
    assert p.degree() == 0


@pytest.mark.parametrize("text,expected", [
    ("t", {1: 1}),
    ("-t^2 + 1/2", {2: -1, 0: Fraction(1, 2)}),
    ("3*t^-2", {-2: 3}),
    ("t - t", {}),
    ("0", {}),
])
def test_parse_terms(text, expected):
    assert LaurentPoly.parse(text) == LaurentPoly(expected)


@pytest.mark.parametrize("bad", ["", "   ", "t t", "2*", "1 +", "x", "t^"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        LaurentPoly.parse(bad)


def test_zero_has_no_valuation():
    with pytest.raises(ZeroInput):
        LaurentPoly().valuation()


def test_evaluate_negative_power_at_zero():
    assert LaurentPoly.parse("t^2 + 1").evaluate(0) == 1
    assert LaurentPoly.parse("t^-1").evaluate(2) == Fraction(1, 2)
    with pytest.raises(ZeroInput):
        LaurentPoly.parse("t^-1").evaluate(0)


def test_monomial_inverse_power():
    assert LaurentPoly.monomial(2, 3) ** -1 == LaurentPoly.monomial(Fraction(1, 2), -3)
    with pytest.raises(ValueError):
        LaurentPoly.parse("1 + t") ** -1


@given(laurent_polys, laurent_polys, laurent_polys)
def test_laurent_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly()


@given(laurent_polys, laurent_polys, small_fractions.filter(bool))
def test_evaluation_is_a_homomorphism(p, q, t0):
    assert (p * q).evaluate(t0) == p.evaluate(t0) * q.evaluate(t0)
    assert (p + q).evaluate(t0) == p.evaluate(t0) + q.evaluate(t0)


# Rational functions

def test_rational_function_reduces():
    t = LaurentPoly.monomial(1, 1)
    f = RationalFunction(t * t, t)
    assert f == t
    assert f.denominator == 1


def test_limit_at_zero():
    t = LaurentPoly.monomial(1, 1)
    assert limit_at_zero(RationalFunction(t + 1, t + 2)) == Fraction(1, 2)
    assert limit_at_zero(RationalFunction(t, LaurentPoly.constant(3))) == 0
    assert limit_at_zero(RationalFunction(LaurentPoly())) == 0


def test_pole_has_no_limit():
    t = LaurentPoly.monomial(1, 1)
    f = RationalFunction(LaurentPoly.constant(1), t)
    assert limit_at_zero(f) is None
    assert valuation_at_zero(f) == -1


def test_laurent_numerator_valuation():
    f = RationalFunction(LaurentPoly.parse("t^-2 + 1"), LaurentPoly.parse("t^-1"))
    # (1 + t^2) / t
    assert valuation_at_zero(f) == -1
    assert f.evaluate(1) == 2


def test_zero_denominator():
    with pytest.raises(ZeroInput):
        RationalFunction(LaurentPoly.constant(1), LaurentPoly())
    with pytest.raises(ZeroInput):
        valuation_at_zero(RationalFunction(0))


@given(laurent_polys, laurent_polys.filter(bool), laurent_polys.filter(bool))
@settings(max_examples=50)
def test_rational_arithmetic(p, q, r):
    f = RationalFunction(p, q)
    g = RationalFunction(r)
    assert (f * g) / g == f
    assert f + g - g == f


@given(laurent_polys, laurent_polys.filter(bool))
@settings(max_examples=30)
def test_limit_matches_sympy_limit(p, q):
    f = RationalFunction(p, q)
    expected = limit(f.as_expr(), T, 0)
    value = limit_at_zero(f)
    if value is None:
        assert not expected.is_finite
    else:
        assert expected == Rational(value.numerator, value.denominator)


@given(laurent_polys.filter(bool), laurent_polys.filter(bool))
@settings(max_examples=30)
def test_valuation_matches_leading_term(p, q):
    f = RationalFunction(p, q)
    _, exponent = f.as_expr().as_leading_term(T).as_coeff_exponent(T)
    assert valuation_at_zero(f) == exponent


# Multivariate polynomials

def test_constant_ratio():
    x, y = polynomial_ring(("x", "y"))
    assert constant_ratio(2 * x * y, x * y) == 2
    assert constant_ratio(x * x + y, 3 * x * x + 3 * y) == Fraction(1, 3)
    assert constant_ratio(x, y) is None
    assert constant_ratio(MultiPoly(("x", "y")), y) == 0


def test_constant_ratio_zero_denominator():
    x, _ = polynomial_ring(("x", "y"))
    with pytest.raises(ZeroDenominator):
        constant_ratio(x, MultiPoly(("x", "y")))


def test_constant_ratio_on_sympy_polys():
    x, y = Symbol("x"), Symbol("y")
    assert constant_ratio(Poly(4 * x * y + 2, x, y), Poly(2 * x * y + 1, x, y)) == 2
    assert constant_ratio(Poly(x ** 2, x, y), Poly(x * y, x, y)) is None


def test_multipoly_evaluate_and_rescale():
    x, y = polynomial_ring(("x", "y"))
    p = x * x * y - 3 * y + 1
    assert p.evaluate([2, 1]) == 2
    assert p.rescale([2, 1]).evaluate([1, 1]) == p.evaluate([2, 1])
    assert p.total_degree() == 3


# Linear algebra

def test_row_space_basis():
    assert row_space_basis([[2, 4], [1, 3]]) == [(1, 0), (0, 1)]
    assert row_space_basis([[1, 2], [2, 4]]) == [(1, 2)]
    assert row_space_basis([]) == []


def test_ragged_rows():
    with pytest.raises(RaggedInput):
        row_space_basis([[1], [1, 2]])


def test_rank_and_nullity():
    assert rank([[1, 2], [2, 4]]) == 1
    assert nullity([[1, 1]], 2) == 1
    assert nullity([], 3) == 3


def test_determinant_and_inverse():
    m = fraction_matrix([[1, 2], [3, 4]])
    assert determinant(m) == -2
    expected = fraction_matrix([[-2, 1], ["3/2", "-1/2"]])
    assert (inverse(m) == expected).all()


def test_singular_inverse():
    with pytest.raises(SingularMatrix):
        inverse(fraction_matrix([[1, 2], [2, 4]]))


def test_determinant_over_laurent_entries():
    t = LaurentPoly.monomial(1, 1)
    m = [[t, LaurentPoly.constant(1)], [LaurentPoly(), t]]
    assert determinant(m) == t * t
    assert determinant(fraction_matrix([[2]])) == 2


@given(small_matrices)
def test_rank_of_transpose(rows):
    transposed = [list(column) for column in zip(*rows)]
    assert rank(rows) == rank(transposed)
    assert rank(rows) <= min(len(rows), len(rows[0]))
