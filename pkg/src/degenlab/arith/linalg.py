"""
Exact linear algebra over the rationals on sympy matrices.

Inputs and outputs stay Fractions (or LaurentPoly entries for parametrized
blocks) in numpy object arrays; every reduction, determinant, adjugate and
inverse is computed by sympy.Matrix.
"""

from fractions import Fraction
from typing import Any, List, Sequence, Tuple

import numpy as np
from sympy import Matrix

from degenlab.arith.laurent import LaurentPoly, RationalFunction
from degenlab.arith.scalars import from_rational, parse_scalar, to_rational
from degenlab.errors import RaggedInput, SingularMatrix

Row = Tuple[Fraction, ...]


def _as_rows(rows: Sequence[Sequence[Any]]) -> List[List[Fraction]]:
    rows = [list(r) for r in rows]
    if rows:
        width = len(rows[0])
        for k, row in enumerate(rows):
            if len(row) != width:
                raise RaggedInput(f"Row {k} has length {len(row)}, expected {width}")
    return [[parse_scalar(x) for x in row] for row in rows]


def _rational_matrix(rows: Sequence[Sequence[Any]]) -> Matrix:
    return Matrix([[to_rational(x) for x in row] for row in _as_rows(rows)])


def _is_parametrized(matrix: np.ndarray) -> bool:
    return any(isinstance(x, (LaurentPoly, RationalFunction)) for x in matrix.flat)


def _entry_expr(x):
    if isinstance(x, (LaurentPoly, RationalFunction)):
        return x.as_expr()
    return to_rational(x)


def _to_sympy(matrix: np.ndarray) -> Tuple[Matrix, bool]:
    """sympy matrix of the entries, and whether they are Laurent polynomials in t."""
    if _is_parametrized(matrix):
        return Matrix([[_entry_expr(x) for x in row] for row in matrix.tolist()]), True
    return _rational_matrix(matrix.tolist()), False


def row_space_basis(rows: Sequence[Sequence[Any]]) -> List[Row]:
    """
    Reduced row-echelon basis of the span of the given rows.

    Args:
        rows: Rows of equal length with rational entries

    Returns:
        The nonzero rows of the reduced echelon form, pivots equal to 1

    Raises:
        RaggedInput: If the rows do not share one length
    """
    if not _as_rows(rows):
        return []
    reduced, pivots = _rational_matrix(rows).rref()
    return [tuple(from_rational(x) for x in reduced.row(r)) for r in range(len(pivots))]


def rank(rows: Sequence[Sequence[Any]]) -> int:
    if not _as_rows(rows):
        return 0
    return _rational_matrix(rows).rank()


def nullity(rows: Sequence[Sequence[Any]], n_cols: int) -> int:
    """Dimension of the solution space of the homogeneous system given by rows."""
    if not rows:
        return n_cols
    system = _rational_matrix(rows)
    if system.cols != n_cols:
        raise RaggedInput(f"System has {system.cols} columns, expected {n_cols}")
    return len(system.nullspace())


def determinant(matrix) -> Any:
    """
    Determinant of a square block: a Fraction, or a LaurentPoly when the
    entries are Laurent polynomials in t.
    """
    matrix = np.asarray(matrix, dtype=object)
    if matrix.size == 0:
        return Fraction(1)
    sym, parametrized = _to_sympy(matrix)
    det = sym.det(method="berkowitz")
    return LaurentPoly.from_expr(det) if parametrized else from_rational(det)


def adjugate(matrix) -> np.ndarray:
    """Classical adjoint: adj(M) with M @ adj(M) = det(M) * I."""
    matrix = np.asarray(matrix, dtype=object)
    size = matrix.shape[0] if matrix.ndim == 2 else 0
    result = np.empty((size, size), dtype=object)
    if not size:
        return result
    sym, parametrized = _to_sympy(matrix)
    adj = sym.adjugate()
    convert = LaurentPoly.from_expr if parametrized else from_rational
    for i in range(size):
        for j in range(size):
            result[i, j] = convert(adj[i, j])
    return result


def inverse(matrix) -> np.ndarray:
    """
    Inverse of a rational matrix.

    Raises:
        SingularMatrix: If the determinant is zero
    """
    matrix = np.asarray(matrix, dtype=object)
    size = matrix.shape[0] if matrix.ndim == 2 else 0
    result = np.empty((size, size), dtype=object)
    if not size:
        return result
    sym = _rational_matrix(matrix.tolist())
    if sym.det() == 0:
        raise SingularMatrix(f"Matrix is singular:\n{matrix}")
    inv = sym.inv()
    for i in range(size):
        for j in range(size):
            result[i, j] = from_rational(inv[i, j])
    return result


def fraction_matrix(rows: Sequence[Sequence[Any]]) -> np.ndarray:
    """Object array of Fractions from nested sequences of scalar-like values."""
    m = _as_rows(rows)
    if not m:
        return np.empty((0, 0), dtype=object)
    result = np.empty((len(m), len(m[0])), dtype=object)
    for i, row in enumerate(m):
        for j, value in enumerate(row):
            result[i, j] = value
    return result


def identity_matrix(size: int) -> np.ndarray:
    return fraction_matrix([[1 if i == j else 0 for j in range(size)] for i in range(size)]) \
        if size else np.empty((0, 0), dtype=object)
