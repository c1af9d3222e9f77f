"""
Transport of structure constants along a parametrized basis.

For the basis E_a = sum_i P[i, a] b_i the product E_a E_b is rewritten in
the new basis using adj(P)/det(P) block by block, so every transported
constant is a rational function of t. The limit at t = 0 is taken entry
by entry.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from degenlab.algebra.superalgebra import SuperAlgebra, zeros
from degenlab.arith.laurent import LaurentPoly, RationalFunction, limit_at_zero
from degenlab.arith.linalg import adjugate, determinant
from degenlab.degeneration.witness import DegenerationWitness, new_basis_labels
from degenlab.errors import DimensionMismatch, SingularWitness

logger = logging.getLogger(__name__)

Entry = Tuple[int, int, int]


@dataclass(frozen=True)
class TransportResult:
    """Transported constants and their limit (None when some entry has a pole)."""

    constants: np.ndarray
    limit: Optional[SuperAlgebra]
    missing: Optional[Entry] = None

    def to_dict(self, m: int, n: int) -> Dict[str, Any]:
        labels = new_basis_labels(m, n)
        products: Dict[str, List[List[str]]] = {}
        size = m + n
        for a in range(size):
            for b in range(size):
                terms = [[labels[c], str(self.constants[a, b, c])]
                         for c in range(size) if self.constants[a, b, c]]
                if terms:
                    products[f"{labels[a]}.{labels[b]}"] = terms
        data: Dict[str, Any] = {"transported": products}
        if self.limit is not None:
            data["limit"] = self.limit.products()
        else:
            a, b, c = self.missing
            data["limit"] = None
            data["pole_at"] = f"{labels[a]}.{labels[b]} -> {labels[c]}"
        return data


class _Transporter:
    """Precomputed sparse data for transporting one algebra along one basis."""

    def __init__(self, A: SuperAlgebra, w: DegenerationWitness):
        if (w.change.m, w.change.n) != A.dims:
            raise DimensionMismatch(
                f"Witness of type {(w.change.m, w.change.n)} applied to algebra of type {A.dims}")
        self.algebra = A
        m, n = A.dims
        det_even = determinant(w.change.even_block)
        det_odd = determinant(w.change.odd_block)
        for label, det in (("even", det_even), ("odd", det_odd)):
            if not LaurentPoly._coerce(det):
                raise SingularWitness(f"The {label} block of the witness {w.source} -> {w.target} is singular")
        self.det = [LaurentPoly._coerce(det_even)] * m + [LaurentPoly._coerce(det_odd)] * n
        size = m + n
        adj = zeros((size, size))
        if m:
            adj[:m, :m] = adjugate(w.change.even_block)
        if n:
            adj[m:, m:] = adjugate(w.change.odd_block)
        self.adj_rows = [[(k, adj[c, k]) for k in range(size) if adj[c, k]] for c in range(size)]
        basis = w.basis_matrix()
        self.columns = [[(i, basis[i, a]) for i in range(size) if basis[i, a]] for a in range(size)]
        self.products: Dict[Tuple[int, int], List[Tuple[int, Fraction]]] = {}
        for i, j, k, value in A.nonzero_entries():
            self.products.setdefault((i, j), []).append((k, value))
        self.size = size

    def old_coordinates(self, a: int, b: int) -> List[Any]:
        """E_a E_b in the old basis."""
        result: List[Any] = [None] * self.size
        for i, pa in self.columns[a]:
            for j, pb in self.columns[b]:
                for k, value in self.products.get((i, j), ()):
                    term = pa * pb * value
                    result[k] = term if result[k] is None else result[k] + term
        return result

    def entries(self) -> Iterator[Tuple[Entry, RationalFunction]]:
        for a in range(self.size):
            for b in range(self.size):
                old = self.old_coordinates(a, b)
                for c in range(self.size):
                    numerator = LaurentPoly()
                    for k, adj in self.adj_rows[c]:
                        if old[k] is not None:
                            numerator = numerator + adj * old[k]
                    yield (a, b, c), RationalFunction(numerator, self.det[c])


def transport(A: SuperAlgebra, w: DegenerationWitness) -> TransportResult:
    """
    Express products of the parametrized basis back in that basis.

    Args:
        A: The source algebra
        w: The witness (blocks must match A's type)

    Returns:
        TransportResult: rational-function constants and their limit at t = 0

    Raises:
        SingularWitness: If a block determinant is zero
        DimensionMismatch: If the witness does not fit A
    """
    transporter = _Transporter(A, w)
    size = transporter.size
    constants = np.empty((size, size, size), dtype=object)
    limit_table = zeros((size, size, size))
    missing: Optional[Entry] = None
    for entry, value in transporter.entries():
        constants[entry] = value
        limit = limit_at_zero(value)
        if limit is None:
            if missing is None:
                missing = entry
        else:
            limit_table[entry] = limit
    limit_algebra = None if missing is not None else SuperAlgebra(A.m, A.n, limit_table)
    return TransportResult(constants=constants, limit=limit_algebra, missing=missing)


def limit_matches(A: SuperAlgebra, w: DegenerationWitness, target: SuperAlgebra) -> bool:
    """True iff the transport limit exists and equals target; stops at the first bad entry."""
    if target.dims != A.dims:
        return False
    table = target.table
    for entry, value in _Transporter(A, w).entries():
        limit = limit_at_zero(value)
        if limit is None or limit != table[entry]:
            return False
    return True
