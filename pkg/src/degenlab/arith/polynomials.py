"""
Multivariate polynomials with rational coefficients.

MultiPoly wraps an element of sympy's sparse polynomial ring QQ[variables]
and keeps the Fraction-valued interface the rest of the package uses.
Coefficients are exact and zero terms are never stored, so two polynomials
over the same variables are equal iff they are mathematically equal.
"""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import Poly
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from degenlab.arith.scalars import ScalarLike, format_scalar, from_qq, from_rational, to_qq
from degenlab.errors import DimensionMismatch, ZeroDenominator

Exponents = Tuple[int, ...]


def _ring(variables: Tuple[str, ...]):
    return ring(",".join(variables), QQ)[0]


class MultiPoly:
    """Immutable polynomial in a fixed, ordered set of variables."""

    __slots__ = ("variables", "_poly")

    def __init__(self, variables: Sequence[str],
                 terms: Optional[Mapping[Exponents, ScalarLike]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        R = _ring(self.variables)
        cleaned: Dict[Exponents, object] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != len(self.variables):
                raise DimensionMismatch(
                    f"Exponent tuple {exponents} does not match variables {self.variables}")
            cleaned[exponents] = cleaned.get(exponents, QQ.zero) + to_qq(coefficient)
        self._poly = R.from_dict({e: c for e, c in cleaned.items() if c})

    @classmethod
    def _wrap(cls, variables: Tuple[str, ...], poly) -> "MultiPoly":
        result = cls.__new__(cls)
        result.variables = variables
        result._poly = poly
        return result

    @classmethod
    def constant(cls, variables: Sequence[str], value: ScalarLike) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: Union[str, int]) -> "MultiPoly":
        variables = tuple(variables)
        index = variables.index(name) if isinstance(name, str) else name
        exponents = tuple(1 if k == index else 0 for k in range(len(variables)))
        return cls(variables, {exponents: 1})

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return {exponents: from_qq(c) for exponents, c in self._poly.terms()}

    def as_poly(self) -> Poly:
        """The polynomial as a sympy Poly over QQ in its variables."""
        return Poly(self._poly.as_expr(), *self._poly.ring.symbols, domain=QQ)

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def monomials(self) -> Tuple[Exponents, ...]:
        """Exponent tuples in ascending lexicographic order."""
        return tuple(sorted(self._poly.monoms()))

    def coefficient(self, exponents: Exponents) -> Fraction:
        return from_qq(self._poly.get(tuple(exponents), QQ.zero))

    def total_degree(self) -> int:
        if not self._poly:
            return -1
        return max(sum(e) for e in self._poly.monoms())

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise DimensionMismatch(
                    f"Variables differ: {self.variables} vs {other.variables}")
            return other._poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._poly.ring.ground_new(to_qq(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.variables, self._poly + other)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._wrap(self.variables, -self._poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.variables, self._poly - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.variables, other - self._poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.variables, self._poly * other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("MultiPoly powers must be non-negative")
        return MultiPoly._wrap(self.variables, self._poly ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self.variables, self._poly))

    def evaluate(self, point: Sequence[ScalarLike]) -> Fraction:
        """Evaluate at a rational point given in variable order."""
        if len(point) != len(self.variables):
            raise DimensionMismatch(f"Point has {len(point)} coordinates, expected {len(self.variables)}")
        return from_qq(self._poly(*[to_qq(v) for v in point]))

    def rescale(self, weights: Sequence[ScalarLike]) -> "MultiPoly":
        """Substitute each variable v_k by weights[k] * v_k."""
        if len(weights) != len(self.variables):
            raise DimensionMismatch(f"Got {len(weights)} weights for {len(self.variables)} variables")
        gens = self._poly.ring.gens
        scaled = [g * to_qq(w) for g, w in zip(gens, weights)]
        return MultiPoly._wrap(self.variables, self._poly.compose(list(zip(gens, scaled))))

    def __repr__(self) -> str:
        terms = self.terms
        if not terms:
            return "0"
        parts = []
        for exponents in sorted(terms, reverse=True):
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.variables, exponents) if power
            ]
            coefficient = format_scalar(terms[exponents])
            if not factors:
                parts.append(coefficient)
            elif coefficient == "1":
                parts.append("*".join(factors))
            elif coefficient == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append(coefficient + "*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def polynomial_ring(names: Iterable[str]):
    """Return the generator polynomials of the ring in the given variables."""
    names = tuple(names)
    return tuple(MultiPoly.variable(names, k) for k in range(len(names)))


def constant_ratio(p: Union[Poly, MultiPoly], q: Union[Poly, MultiPoly]) -> Optional[Fraction]:
    """
    Decide whether p is a constant multiple of q.

    Args:
        p: Numerator polynomial
        q: Denominator polynomial, nonzero

    Returns:
        The constant c with p = c*q, or None when p and q are not proportional

    Raises:
        ZeroDenominator: If q is the zero polynomial
    """
    if isinstance(p, MultiPoly):
        p = p.as_poly()
    if isinstance(q, MultiPoly):
        q = q.as_poly()
    if q.is_zero:
        raise ZeroDenominator("constant_ratio needs a nonzero denominator")
    quotient, remainder = p.div(q)
    if not remainder.is_zero or not quotient.is_ground:
        return None
    return from_rational(quotient.LC())
