"""
Even derivations.

The dimension of the graded automorphism group equals the dimension of
its tangent space at the identity, the space of even derivations: block
diagonal maps D with D(xy) = D(x)y + xD(y).
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.linalg import nullity
from degenlab.invariants.cache import cached

logger = logging.getLogger(__name__)


def derivation_unknowns(A: SuperAlgebra) -> List[Tuple[int, int]]:
    """Positions (k, l) of D, D(b_l) = sum_k D[k, l] b_k, allowed by the grading."""
    return [(k, l) for l in range(A.dim) for k in range(A.dim) if A.parity(k) == A.parity(l)]


def derivation_equations(A: SuperAlgebra) -> List[List[Fraction]]:
    """
    One row per (i, j, k): the b_k coefficient of
    D(b_i b_j) - D(b_i) b_j - b_i D(b_j).
    """
    unknowns = derivation_unknowns(A)
    position = {u: n for n, u in enumerate(unknowns)}
    table = A.table
    size = A.dim
    rows = []
    for i in range(size):
        for j in range(size):
            for k in range(size):
                row = [Fraction(0)] * len(unknowns)
                for l in range(size):
                    if table[i, j, l] and (k, l) in position:
                        row[position[(k, l)]] += table[i, j, l]
                    if table[l, j, k] and (l, i) in position:
                        row[position[(l, i)]] -= table[l, j, k]
                    if table[i, l, k] and (l, j) in position:
                        row[position[(l, j)]] -= table[i, l, k]
                if any(row):
                    rows.append(row)
    return rows


def derivation_dimension(A: SuperAlgebra) -> int:
    """
    Dimension of the space of even derivations of A.

    Args:
        A: The superalgebra

    Returns:
        int: Kernel dimension of the derivation equations
    """
    def compute() -> int:
        unknowns = derivation_unknowns(A)
        return nullity(derivation_equations(A), len(unknowns))

    return cached("derivation_dimension", A, compute)
