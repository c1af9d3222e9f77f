"""
Rational scalars.

The base field is the rationals; scalars are plain fractions.Fraction values,
always in lowest terms with a positive denominator. Computations happen in
sympy, and the helpers below move values between Fraction, sympy Rational
and the QQ ground domain of sympy's polynomial rings.
"""

from fractions import Fraction
from typing import Any, Union

from sympy import Rational
from sympy.polys.domains import QQ

from degenlab.errors import ParseError

Scalar = Fraction
ScalarLike = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(value: ScalarLike) -> Fraction:
    """
    Parse a scalar written as "p/q", "p" or given as an int/Fraction.

    Args:
        value: The value to parse

    Returns:
        Fraction: The parsed scalar

    Raises:
        ParseError: If the value is not a rational number
    """
    if isinstance(value, bool):
        raise ParseError(f"Not a scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Not a rational scalar: {value!r} ({e})")
    raise ParseError(f"Not a scalar: {value!r}")


def format_scalar(value: Fraction) -> str:
    """Format a scalar as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_rational(value: ScalarLike) -> Rational:
    value = parse_scalar(value)
    return Rational(value.numerator, value.denominator)


def from_rational(value: Any) -> Fraction:
    """sympy Rational (or Integer) back to a Fraction."""
    if not value.is_Rational:
        raise ParseError(f"Not a rational value: {value}")
    return Fraction(int(value.p), int(value.q))


def to_qq(value: ScalarLike):
    """Ground-domain element of QQ for a scalar."""
    value = parse_scalar(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))
