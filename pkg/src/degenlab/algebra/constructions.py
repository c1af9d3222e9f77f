"""
Operations on superalgebras: products, the conjugation action, graded
powers and the derived algebras (even part, annex, direct sum, ungraded
view).
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from degenlab.algebra.superalgebra import (
    GradedBasisChange,
    PowerProfile,
    SuperAlgebra,
    zeros,
)
from degenlab.arith.linalg import row_space_basis
from degenlab.arith.scalars import parse_scalar
from degenlab.errors import DimensionMismatch, NonzeroOddOddProducts, SingularMatrix

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def _vector(values: Sequence, size: int) -> np.ndarray:
    if len(values) != size:
        raise DimensionMismatch(f"Vector has {len(values)} coordinates, expected {size}")
    array = np.empty(size, dtype=object)
    for k, value in enumerate(values):
        array[k] = parse_scalar(value)
    return array


def _multiply(table: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    size = table.shape[0]
    result = np.empty(size, dtype=object)
    result.fill(Fraction(0))
    for i in range(size):
        if not x[i]:
            continue
        for j in range(size):
            if not y[j]:
                continue
            coefficient = x[i] * y[j]
            for k in range(size):
                if table[i, j, k]:
                    result[k] = result[k] + coefficient * table[i, j, k]
    return result


def product(A: SuperAlgebra, x: Sequence, y: Sequence) -> Vector:
    """
    Product of two coordinate vectors, extended bilinearly.

    Args:
        A: The algebra
        x: Coordinates of the left factor (length m+n)
        y: Coordinates of the right factor (length m+n)

    Returns:
        Coordinates of x*y

    Raises:
        DimensionMismatch: If x or y has the wrong length
    """
    xv = _vector(x, A.dim)
    yv = _vector(y, A.dim)
    return tuple(_multiply(A.table, xv, yv))


def change_basis(A: SuperAlgebra, g: GradedBasisChange) -> SuperAlgebra:
    """
    Conjugation action (g * mu)(x, y) = g mu(g^-1 x, g^-1 y).

    Raises:
        DimensionMismatch: If g is not of type (m, n)
        SingularMatrix: If g is not invertible
    """
    if (g.m, g.n) != A.dims:
        raise DimensionMismatch(f"Basis change of type {(g.m, g.n)} applied to type {A.dims}")
    if not g.is_invertible():
        raise SingularMatrix("Basis change is not invertible")
    if A.dim == 0:
        return A
    forward = g.matrix
    backward = g.inverse().matrix
    # T'[a,b,c] = sum Ginv[i,a] Ginv[j,b] T[i,j,k] G[c,k]
    step = np.tensordot(backward, A.table, axes=([0], [0]))    # [a, j, k]
    step = np.tensordot(step, backward, axes=([1], [0]))        # [a, k, b]
    step = np.transpose(step, (0, 2, 1))                        # [a, b, k]
    step = np.tensordot(step, forward, axes=([2], [1]))         # [a, b, c]
    return SuperAlgebra(A.m, A.n, step, name=A.name)


def _homogeneous_span(A: SuperAlgebra, left, right):
    even, odd = [], []
    for parity_u, rows_u in enumerate(left):
        for parity_v, rows_v in enumerate(right):
            target = even if parity_u == parity_v else odd
            for u in rows_u:
                u = np.array(u, dtype=object)
                for v in rows_v:
                    w = _multiply(A.table, u, np.array(v, dtype=object))
                    if any(w):
                        target.append(tuple(w))
    return even, odd


def power_profile(A: SuperAlgebra, r_max: int = 4) -> PowerProfile:
    """
    Graded dimensions of J^r = J^(r-1)J + J^(r-2)J^2 + ... + JJ^(r-1).

    Every J^r is spanned by homogeneous vectors, so even and odd spanning
    sets are reduced separately.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    size = A.dim
    unit = [tuple(Fraction(int(i == k)) for i in range(size)) for k in range(size)]
    powers = {1: (unit[:A.m], unit[A.m:])}
    for r in range(2, r_max + 1):
        even, odd = [], []
        for s in range(1, r):
            e, o = _homogeneous_span(A, powers[r - s], powers[s])
            even.extend(e)
            odd.extend(o)
        powers[r] = (row_space_basis(even), row_space_basis(odd))
    return PowerProfile(tuple((len(powers[r][0]), len(powers[r][1]))
                              for r in range(1, r_max + 1)))


def _derived_name(A: SuperAlgebra, suffix: str) -> Optional[str]:
    return f"{A.name}{suffix}" if A.name else None


def even_part(A: SuperAlgebra) -> SuperAlgebra:
    """The even subalgebra (J)_0, an algebra of type (m, 0)."""
    m = A.m
    return SuperAlgebra(m, 0, A.table[:m, :m, :m], name=_derived_name(A, "_0"))


def annex(A: SuperAlgebra) -> SuperAlgebra:
    """a(J): same superspace, only the odd*odd -> even products kept."""
    m = A.m
    table = zeros(A.table.shape)
    table[m:, m:, :m] = A.table[m:, m:, :m]
    name = f"a({A.name})" if A.name else None
    return SuperAlgebra(A.m, A.n, table, name=name)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """
    Block-diagonal sum. The basis is ordered as the evens of A, the evens
    of B, the odds of A, then the odds of B.
    """
    m, n = A.m + B.m, A.n + B.n
    a_map = list(range(A.m)) + [m + p for p in range(A.n)]
    b_map = [A.m + i for i in range(B.m)] + [m + A.n + p for p in range(B.n)]
    table = zeros((m + n, m + n, m + n))
    for source, index_map in ((A, a_map), (B, b_map)):
        for i, j, k, value in source.nonzero_entries():
            table[index_map[i], index_map[j], index_map[k]] = value
    name = f"{A.name}+{B.name}" if A.name and B.name else None
    return SuperAlgebra(m, n, table, name=name)


def forget_grading(A: SuperAlgebra) -> SuperAlgebra:
    """
    The same multiplication on m+n basis vectors, all declared even.

    Raises:
        NonzeroOddOddProducts: If some f_p f_q is nonzero
    """
    if any(A.delta.flat):
        raise NonzeroOddOddProducts(
            f"{A.name or 'algebra'} has nonzero odd*odd products; its ungraded product is not commutative")
    return SuperAlgebra(A.dim, 0, A.table, name=_derived_name(A, " (ungraded)"))


def supercommutativity_violation(A: SuperAlgebra) -> Optional[Tuple[int, int, int]]:
    """First (i, j, k) with b_i b_j != (+/-) b_j b_i along b_k, or None."""
    table = A.table
    for i in range(A.dim):
        for j in range(i, A.dim):
            sign = -1 if (A.parity(i) and A.parity(j)) else 1
            for k in range(A.dim):
                if table[i, j, k] != sign * table[j, i, k]:
                    return (i, j, k)
    return None


def is_supercommutative(A: SuperAlgebra) -> bool:
    """alpha symmetric, beta matched with gamma, delta antisymmetric."""
    return supercommutativity_violation(A) is None
