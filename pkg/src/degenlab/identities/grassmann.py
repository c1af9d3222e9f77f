"""
Truncated Grassmann algebra on eight generators and the Grassmann envelope
G(A) = G_0 (x) A_0 + G_1 (x) A_1 of a superalgebra.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.scalars import format_scalar, parse_scalar
from degenlab.errors import IndexOutOfRange

GENERATORS = 8
SLOTS = 4

Monomial = Tuple[int, ...]


def _merge(a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
    """Sign and sorted union of two generator sets, or None when they overlap."""
    if set(a) & set(b):
        return None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def _validate(monomial: Iterable[int]) -> Monomial:
    monomial = tuple(monomial)
    for index in monomial:
        if not 1 <= index <= GENERATORS:
            raise IndexOutOfRange(f"Grassmann generator {index} outside 1..{GENERATORS}")
    return monomial


class GrassmannElement:
    """Linear combination of sorted generator monomials xi_i1 ... xi_ik."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Iterable[int], Any]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = _validate(monomial)
            # normalize an unsorted monomial with its permutation sign
            sign, ordered = 1, ()
            for index in monomial:
                merged = _merge(ordered, (index,))
                if merged is None:
                    sign = 0
                    break
                s, ordered = merged
                sign *= s
            value = parse_scalar(coefficient) * sign
            if value:
                cleaned[ordered] = cleaned.get(ordered, Fraction(0)) + value
                if not cleaned[ordered]:
                    del cleaned[ordered]
        self._terms = cleaned

    @classmethod
    def one(cls) -> "GrassmannElement":
        return cls({(): 1})

    @classmethod
    def generator(cls, index: int) -> "GrassmannElement":
        return cls({(index,): 1})

    @classmethod
    def monomial(cls, *indices: int) -> "GrassmannElement":
        return cls({tuple(indices): 1})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __mul__(self, other: "GrassmannElement") -> "GrassmannElement":
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                merged = _merge(a, b)
                if merged is None:
                    continue
                sign, monomial = merged
                result[monomial] = result.get(monomial, Fraction(0)) + sign * ca * cb
        return GrassmannElement(result)

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        result = dict(self._terms)
        for monomial, c in other._terms.items():
            result[monomial] = result.get(monomial, Fraction(0)) + c
        return GrassmannElement(result)

    def __neg__(self) -> "GrassmannElement":
        return GrassmannElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial in sorted(self._terms):
            word = "".join(f"xi{i}" for i in monomial) or "1"
            parts.append(f"{format_scalar(self._terms[monomial])}*{word}")
        return " + ".join(parts)


def grassmann_product(u: GrassmannElement, v: GrassmannElement) -> GrassmannElement:
    """Sign-correct exterior product: xi_i^2 = 0, xi_i xi_j = -xi_j xi_i."""
    return u * v


def monomial_word(monomial: Monomial) -> str:
    return "".join(f"xi{i}" for i in monomial) or "1"


class EnvelopeElement:
    """
    Element of G(A), stored as {(generator monomial, basis index): coefficient}.

    Coefficients may be Fractions or polynomials (anything with + and *).
    Each term pairs an even monomial with an even basis vector or an odd
    monomial with an odd one.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: SuperAlgebra,
                 terms: Optional[Mapping[Tuple[Monomial, int], Any]] = None):
        self.algebra = algebra
        cleaned = {}
        for (monomial, index), coefficient in (terms or {}).items():
            monomial = _validate(monomial)
            if len(monomial) % 2 != algebra.parity(index):
                raise ValueError(
                    f"Parity mismatch: {monomial_word(monomial)} paired with {algebra.labels[index]}")
            if coefficient:
                cleaned[(monomial, index)] = coefficient
        self._terms = cleaned

    @property
    def terms(self) -> Dict[Tuple[Monomial, int], Any]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def scale(self, coefficient: Any) -> "EnvelopeElement":
        return EnvelopeElement(self.algebra, {k: coefficient * c for k, c in self._terms.items()})

    def __add__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        result = dict(self._terms)
        for key, c in other._terms.items():
            result[key] = result[key] + c if key in result else c
        return EnvelopeElement(self.algebra, result)

    def __neg__(self) -> "EnvelopeElement":
        return EnvelopeElement(self.algebra, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        return self + (-other)

    def __mul__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        """(g (x) a)(h (x) b) = gh (x) ab."""
        table = self.algebra.table
        size = self.algebra.dim
        result: Dict[Tuple[Monomial, int], Any] = {}
        for (g, i), cg in self._terms.items():
            for (h, j), ch in other._terms.items():
                merged = _merge(g, h)
                if merged is None:
                    continue
                sign, monomial = merged
                coefficient = cg * ch
                if sign < 0:
                    coefficient = -coefficient
                for k in range(size):
                    structure = table[i, j, k]
                    if not structure:
                        continue
                    key = (monomial, k)
                    term = coefficient * structure
                    result[key] = result[key] + term if key in result else term
        return EnvelopeElement(self.algebra, result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnvelopeElement):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        labels = self.algebra.labels
        parts = [f"({c})*{monomial_word(g)}(x){labels[i]}" for (g, i), c in sorted(self._terms.items())]
        return " + ".join(parts) if parts else "0"


def tagged_embed(A: SuperAlgebra, basis_index: Union[int, str], slot: int) -> EnvelopeElement:
    """
    Tag a basis vector for slot s: xi_(2s-1) xi_(2s) (x) v for even v and
    xi_(2s-1) (x) v for odd v, so the four slots use disjoint generators.

    Raises:
        IndexOutOfRange: If slot is not 1..4 or the basis index does not exist
    """
    if not 1 <= slot <= SLOTS:
        raise IndexOutOfRange(f"Slot {slot} outside 1..{SLOTS}")
    index = A.index(basis_index)
    first = 2 * slot - 1
    monomial = (first, first + 1) if A.parity(index) == 0 else (first,)
    return EnvelopeElement(A, {(monomial, index): Fraction(1)})
