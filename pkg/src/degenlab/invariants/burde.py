"""
Burde invariant c_(i,j) = tr(L(x)^i) tr(L(y)^j) / tr(L(x)^i L(y)^j).

x and y are generic elements of the whole superspace (m+n symbolic
coordinates each); the invariant is defined only when both the numerator
and the denominator are nonzero polynomials and their ratio is a constant.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from sympy import Add, Matrix, Poly, symbols
from sympy.polys.domains import QQ

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.polynomials import constant_ratio
from degenlab.arith.scalars import format_scalar, to_rational
from degenlab.errors import IndexOutOfRange
from degenlab.invariants.cache import cached

logger = logging.getLogger(__name__)

MAX_INDEX = 4

DEFINED = "Defined"
UNDEFINED = "Undefined"
DENOMINATOR_ZERO = "DenominatorZero"
NUMERATOR_ZERO = "NumeratorZero"
NOT_CONSTANT = "NotConstant"


@dataclass(frozen=True)
class BurdeResult:
    status: str
    indices: Tuple[int, int]
    value: Optional[Fraction] = None
    reason: Optional[str] = None

    @property
    def defined(self) -> bool:
        return self.status == DEFINED

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status, "indices": list(self.indices)}
        if self.defined:
            data["value"] = format_scalar(self.value)
        else:
            data["reason"] = self.reason
        return data

    def __str__(self) -> str:
        if self.defined:
            return format_scalar(self.value)
        return f"undefined ({self.reason})"


def generic_variables(A: SuperAlgebra) -> Tuple[str, ...]:
    size = A.dim
    return tuple(f"x{k + 1}" for k in range(size)) + tuple(f"y{k + 1}" for k in range(size))


def left_multiplication(A: SuperAlgebra, prefix: str) -> Matrix:
    """L(x) for generic x = sum x_k b_k: L[k, j] is the b_k coefficient of x b_j."""
    size = A.dim
    coordinates = symbols(f"{prefix}1:{size + 1}")
    return Matrix(size, size, lambda k, j: Add(*[
        coordinates[i] * to_rational(A.table[i, j, k])
        for i in range(size) if A.table[i, j, k]
    ]))


def burde_polynomials(A: SuperAlgebra, i: int, j: int) -> Tuple[Poly, Poly]:
    """Numerator tr(L(x)^i) tr(L(y)^j) and denominator tr(L(x)^i L(y)^j)."""
    gens = symbols(generic_variables(A))
    lx = left_multiplication(A, "x") ** i
    ly = left_multiplication(A, "y") ** j
    numerator = Poly(lx.trace() * ly.trace(), *gens, domain=QQ)
    denominator = Poly((lx * ly).trace(), *gens, domain=QQ)
    return numerator, denominator


def burde_invariant(A: SuperAlgebra, i: int, j: int) -> BurdeResult:
    """
    Compute c_(i,j) symbolically.

    Args:
        A: The superalgebra
        i: Power of L(x), 1..4
        j: Power of L(y), 1..4

    Returns:
        BurdeResult: Defined with the constant, or Undefined with the reason

    Raises:
        IndexOutOfRange: If i or j is outside 1..4
    """
    for index in (i, j):
        if not 1 <= index <= MAX_INDEX:
            raise IndexOutOfRange(f"Burde index {index} outside 1..{MAX_INDEX}")

    def compute() -> BurdeResult:
        if A.dim == 0:
            return BurdeResult(UNDEFINED, (i, j), reason=DENOMINATOR_ZERO)
        numerator, denominator = burde_polynomials(A, i, j)
        if denominator.is_zero:
            return BurdeResult(UNDEFINED, (i, j), reason=DENOMINATOR_ZERO)
        if numerator.is_zero:
            return BurdeResult(UNDEFINED, (i, j), reason=NUMERATOR_ZERO)
        value = constant_ratio(numerator, denominator)
        if value is None:
            return BurdeResult(UNDEFINED, (i, j), reason=NOT_CONSTANT)
        return BurdeResult(DEFINED, (i, j), value=value)

    return cached("burde", A, compute, i, j)
