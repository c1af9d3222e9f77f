"""
Laurent polynomials in t and rational functions of t.

LaurentPoly entries make up parametrized bases (for example
"1 - 2*t^-1"); RationalFunction values are what structure constants become
after such a basis change. Both wrap elements of sympy's rational function
field QQ(t), which keeps every value cancelled, so structural equality is
mathematical equality.
"""

import re
from fractions import Fraction
from typing import Dict, Mapping, Optional

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from degenlab.arith.scalars import ScalarLike, format_scalar, from_qq, parse_scalar, to_qq
from degenlab.errors import ParseError, ZeroInput

QT, T = field("t", QQ)

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?P<coeff>\d+(?:/\d+)?)?\s*"
    r"(?P<star>\*)?\s*"
    r"(?P<t>t(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?\s*"
)


def _ground(value: ScalarLike) -> FracElement:
    return QT.one * to_qq(value)


def _power_of_t(k: int) -> FracElement:
    return T ** k if k >= 0 else QT.one / T ** -k


def _order_at_zero(poly) -> int:
    """Exponent of the largest power of t dividing a nonzero polynomial."""
    return poly.tail_degree()


def _evaluate(value: FracElement, t0: ScalarLike) -> Fraction:
    point = to_qq(t0)
    denominator = value.denom(point)
    if not denominator:
        raise ZeroInput(f"Denominator vanishes at t = {format_scalar(parse_scalar(t0))}")
    return from_qq(value.numer(point) / denominator)


class LaurentPoly:
    """Finite sum of c_k * t^k with k ranging over all integers."""

    __slots__ = ("_value",)

    def __init__(self, coefficients: Optional[Mapping[int, ScalarLike]] = None):
        value = QT.zero
        for exponent, coefficient in (coefficients or {}).items():
            c = parse_scalar(coefficient)
            if c:
                value = value + _power_of_t(int(exponent)) * to_qq(c)
        self._value = value

    @classmethod
    def _wrap(cls, value: FracElement) -> "LaurentPoly":
        if value and len(value.denom.terms()) != 1:
            raise ValueError(f"{value.as_expr()} is not a Laurent polynomial")
        result = cls.__new__(cls)
        result._value = value
        return result

    @classmethod
    def constant(cls, value: ScalarLike) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, coefficient: ScalarLike, exponent: int) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def from_expr(cls, expr) -> "LaurentPoly":
        """Laurent polynomial from a sympy expression in the symbol t."""
        return cls._wrap(QT.from_expr(expr))

    @classmethod
    def parse(cls, text) -> "LaurentPoly":
        """
        Parse the grammar term (('+'|'-') term)* where a term is
        coeff, coeff*t^k, t^k or t.

        Raises:
            ParseError: On any malformed input
        """
        if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
            return cls.constant(text)
        if not isinstance(text, str) or not text.strip():
            raise ParseError(f"Not a Laurent polynomial: {text!r}")
        coefficients: Dict[int, Fraction] = {}
        position = 0
        first = True
        while position < len(text):
            match = _TERM.match(text, position)
            if match is None or match.end() == position:
                raise ParseError(f"Cannot parse Laurent polynomial {text!r} at offset {position}")
            sign, coeff, star, t_part = match.group("sign", "coeff", "star", "t")
            if not first and sign is None:
                raise ParseError(f"Missing operator in {text!r} at offset {position}")
            if coeff is None and t_part is None:
                raise ParseError(f"Empty term in {text!r} at offset {position}")
            if star and (coeff is None or t_part is None):
                raise ParseError(f"Dangling '*' in {text!r}")
            value = parse_scalar(coeff) if coeff is not None else Fraction(1)
            if sign == "-":
                value = -value
            if t_part is None:
                exponent = 0
            elif match.group("exp") is None:
                exponent = 1
            else:
                exponent = int(match.group("exp"))
            coefficients[exponent] = coefficients.get(exponent, Fraction(0)) + value
            position = match.end()
            first = False
        return cls(coefficients)

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        if not self._value:
            return {}
        ((shift,), scale), = self._value.denom.terms()
        return {k - shift: from_qq(c / scale) for (k,), c in self._value.numer.terms()}

    def as_expr(self):
        """The value as a sympy expression in t."""
        return self._value.as_expr()

    def is_zero(self) -> bool:
        return not self._value

    def __bool__(self) -> bool:
        return bool(self._value)

    def valuation(self) -> int:
        """Lowest exponent present."""
        if not self._value:
            raise ZeroInput("The zero Laurent polynomial has no valuation")
        return _order_at_zero(self._value.numer) - _order_at_zero(self._value.denom)

    def degree(self) -> int:
        """Highest exponent present."""
        if not self._value:
            raise ZeroInput("The zero Laurent polynomial has no degree")
        return self._value.numer.degree() - self._value.denom.degree()

    def coefficient(self, exponent: int) -> Fraction:
        return self.coefficients.get(exponent, Fraction(0))

    def is_polynomial(self) -> bool:
        return self._value.denom.degree() <= 0

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._wrap(self._value * _power_of_t(k))

    def evaluate(self, t0: ScalarLike) -> Fraction:
        if not parse_scalar(t0) and not self.is_polynomial():
            raise ZeroInput("Cannot evaluate negative powers of t at t = 0")
        return _evaluate(self._value, t0)

    @staticmethod
    def _coerce(other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly._wrap(_ground(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._wrap(self._value + other._value)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap(-self._value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._wrap(self._value - other._value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._wrap(other._value - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._wrap(self._value * other._value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0 and len(self._value.numer.terms()) != 1:
            raise ValueError("Only monomials have Laurent inverses")
        if exponent < 0:
            return LaurentPoly._wrap(QT.one / self._value ** -exponent)
        return LaurentPoly._wrap(self._value ** exponent)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        coefficients = self.coefficients
        if not coefficients:
            return "0"
        text = ""
        for exponent in sorted(coefficients, reverse=True):
            coefficient = coefficients[exponent]
            sign = "-" if coefficient < 0 else "+"
            magnitude = format_scalar(abs(coefficient))
            if exponent == 0:
                body = magnitude
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == "1" else f"{magnitude}*{power}"
            if not text:
                text = body if sign == "+" else f"-{body}"
            else:
                text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _lift(value) -> Optional[FracElement]:
    if isinstance(value, (LaurentPoly, RationalFunction)):
        return value._value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return _ground(value)
    return None


class RationalFunction:
    """
    Quotient of two polynomials in t, kept cancelled. numerator and
    denominator are reported with a monic denominator.
    """

    __slots__ = ("_value",)

    def __init__(self, numerator, denominator=None):
        top = _lift(numerator)
        bottom = QT.one if denominator is None else _lift(denominator)
        if top is None or bottom is None:
            raise TypeError("RationalFunction needs Laurent polynomial or scalar operands")
        if not bottom:
            raise ZeroInput("RationalFunction denominator is zero")
        self._value = top / bottom

    @classmethod
    def _wrap(cls, value: FracElement) -> "RationalFunction":
        result = cls.__new__(cls)
        result._value = value
        return result

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls(value)

    @property
    def numerator(self) -> LaurentPoly:
        return LaurentPoly._wrap(QT.one * self._value.numer * (QQ.one / self._value.denom.LC))

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly._wrap(QT.one * self._value.denom * (QQ.one / self._value.denom.LC))

    def as_expr(self):
        """The value as a sympy expression in t."""
        return self._value.as_expr()

    def is_zero(self) -> bool:
        return not self._value

    def __bool__(self) -> bool:
        return not self.is_zero()

    def valuation_at_zero(self) -> int:
        return valuation_at_zero(self)

    def limit_at_zero(self) -> Optional[Fraction]:
        return limit_at_zero(self)

    def evaluate(self, t0: ScalarLike) -> Fraction:
        return _evaluate(self._value, t0)

    def _other(self, other) -> Optional[FracElement]:
        return _lift(other)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return RationalFunction._wrap(self._value + other)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._wrap(-self._value)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return RationalFunction._wrap(self._value - other)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return RationalFunction._wrap(self._value * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroInput("Division by the zero rational function")
        return RationalFunction._wrap(self._value / other)

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self._value == other

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        numerator, denominator = self.numerator, self.denominator
        if denominator == 1:
            return str(numerator)
        return f"({numerator})/({denominator})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def valuation_at_zero(f: RationalFunction) -> int:
    """
    Order of vanishing of f at t = 0 (negative for a pole).

    Raises:
        ZeroInput: If f is zero
    """
    if f.is_zero():
        raise ZeroInput("valuation_at_zero is undefined for the zero function")
    return _order_at_zero(f._value.numer) - _order_at_zero(f._value.denom)


def limit_at_zero(f: RationalFunction) -> Optional[Fraction]:
    """
    Value of f at t -> 0, or None when f has a pole there.

    f is kept cancelled, so a denominator vanishing at 0 means a pole.
    """
    value = f._value
    if not value:
        return Fraction(0)
    denominator = value.denom.coeff(1)
    if not denominator:
        return None
    return from_qq(value.numer.coeff(1) / denominator)
