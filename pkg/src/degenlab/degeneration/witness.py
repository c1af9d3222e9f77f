"""
Degeneration witnesses: one-parameter graded basis changes.
"""

from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from degenlab.algebra.superalgebra import GradedBasisChange, basis_labels
from degenlab.arith.laurent import LaurentPoly
from degenlab.errors import DimensionMismatch

ERRATUM = "erratum"
CORRECTION = "correction"


def _laurent_block(rows: Sequence[Sequence], label: str) -> np.ndarray:
    """Parse document rows and transpose them: column a of the result is E_a."""
    rows = [list(r) for r in rows]
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise DimensionMismatch(f"{label} rows must form a square matrix")
    block = np.empty((size, size), dtype=object)
    for a, row in enumerate(rows):
        for i, entry in enumerate(row):
            block[i, a] = entry if isinstance(entry, LaurentPoly) else LaurentPoly.parse(entry)
    return block


def new_basis_labels(m: int, n: int) -> List[str]:
    return [f"E{i + 1}" for i in range(m)] + [f"F{p + 1}" for p in range(n)]


@dataclass(frozen=True)
class DegenerationWitness:
    """
    A parametrized basis E_1^t..E_m^t, F_1^t..F_n^t of the source algebra.

    change holds the basis as a graded matrix over Laurent polynomials whose
    column a is the coordinate vector of the a-th new basis vector. As a
    group element this is g_t^-1: the transported algebra is g_t * mu.
    """

    source: str
    target: str
    change: GradedBasisChange
    provenance: str = "derived"
    flag: Optional[str] = None
    variety: Optional[Tuple[int, int]] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.variety is None:
            object.__setattr__(self, "variety", (self.change.m, self.change.n))

    @classmethod
    def from_rows(cls, source: str, target: str, even: Sequence[Sequence], odd: Sequence[Sequence],
                  **kwargs) -> "DegenerationWitness":
        """Rows are the new basis vectors written in old coordinates."""
        change = GradedBasisChange(_laurent_block(even, "Even"), _laurent_block(odd, "Odd"))
        return cls(source, target, change, **kwargs)

    @classmethod
    def identity(cls, name: str, m: int, n: int) -> "DegenerationWitness":
        rows_e = [[LaurentPoly.constant(int(i == j)) for j in range(m)] for i in range(m)]
        rows_o = [[LaurentPoly.constant(int(i == j)) for j in range(n)] for i in range(n)]
        return cls.from_rows(name, name, rows_e, rows_o, provenance="identity")

    def rows(self) -> Tuple[List[List[str]], List[List[str]]]:
        """Document form: even rows and odd rows as Laurent strings."""
        even = [[str(x) for x in column] for column in self.change.even_block.T]
        odd = [[str(x) for x in column] for column in self.change.odd_block.T]
        return even, odd

    def basis_matrix(self) -> np.ndarray:
        """Full (m+n)x(m+n) matrix over LaurentPoly, columns = new basis vectors."""
        matrix = self.change.matrix
        for index in np.ndindex(matrix.shape):
            if not isinstance(matrix[index], LaurentPoly):
                matrix[index] = LaurentPoly.constant(matrix[index])
        return matrix

    def basis_change_at(self, t0) -> GradedBasisChange:
        """The constant group element g with g * mu equal to the transport at t = t0."""
        return self.change.evaluate(t0).inverse()

    def post_compose(self, h: GradedBasisChange) -> "DegenerationWitness":
        """
        Witness for source -> change_basis(target, h): the basis matrix P
        becomes P h^-1.
        """
        h_inv = h.inverse()
        even = self.change.even_block @ h_inv.even_block if self.change.m else self.change.even_block
        odd = self.change.odd_block @ h_inv.odd_block if self.change.n else self.change.odd_block
        return replace(self, change=GradedBasisChange(even, odd), provenance="post-composed",
                       flag=None)

    def describe(self) -> str:
        m, n = self.variety
        old = basis_labels(m, n)
        new = new_basis_labels(m, n)
        matrix = self.basis_matrix()
        parts = []
        for a, label in enumerate(new):
            terms = []
            for i in range(m + n):
                entry = matrix[i, a]
                if not entry:
                    continue
                text = str(entry)
                if text == "1":
                    terms.append(old[i])
                elif text == "-1":
                    terms.append(f"-{old[i]}")
                elif len(entry.coefficients) == 1:
                    terms.append(f"{text}*{old[i]}")
                else:
                    terms.append(f"({text})*{old[i]}")
            parts.append(f"{label}=" + " + ".join(terms).replace("+ -", "- "))
        return ", ".join(parts)
