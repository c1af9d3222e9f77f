"""
Single-coefficient mutations that a Jordan superalgebra check must reject.

Two families are generated:

- supercommutativity breaks: one structure constant of a product is
  shifted without touching its mirror;
- Peirce breaks: for an even idempotent e and an odd f with e f = lambda f,
  lambda is replaced by a value outside {0, 1/2, 1}.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.scalars import format_scalar

logger = logging.getLogger(__name__)

SUPERCOMMUTATIVITY = "supercommutativity"
PEIRCE = "peirce"
PEIRCE_SHIFTS = (Fraction(1, 3), Fraction(1, 4), Fraction(2, 3))


@dataclass(frozen=True)
class Mutation:
    kind: str
    entry: Tuple[int, int, int]
    value: Fraction
    algebra: SuperAlgebra

    def describe(self) -> str:
        labels = self.algebra.labels
        i, j, k = self.entry
        return f"{self.kind}: {labels[i]}.{labels[j]} -> {labels[k]} set to {format_scalar(self.value)}"


def _is_idempotent(A: SuperAlgebra, i: int) -> bool:
    return all(A.table[i, i, k] == (1 if k == i else 0) for k in range(A.dim))


def _eigenvalue(A: SuperAlgebra, i: int, p: int) -> Optional[Fraction]:
    """lambda when e_i f_p = lambda f_p (both orders), else None."""
    row = A.table[i, p, :]
    if any(row[k] for k in range(A.dim) if k != p):
        return None
    if A.table[p, i, p] != row[p]:
        return None
    return row[p]


def mutation_candidates(A: SuperAlgebra) -> List[Tuple[str, Tuple[int, int, int], Fraction]]:
    """Every mutation of A in a fixed order, as (kind, entry, new value)."""
    candidates = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            if i == j and not A.parity(i):
                continue
            for k in range(A.dim):
                if A.parity(k) == A.parity(i) ^ A.parity(j):
                    candidates.append((SUPERCOMMUTATIVITY, (i, j, k), A.table[i, j, k] + 1))
    for i in range(A.m):
        if not _is_idempotent(A, i):
            continue
        for p in range(A.m, A.dim):
            value = _eigenvalue(A, i, p)
            if value is None:
                continue
            for shift in PEIRCE_SHIFTS:
                if shift != value:
                    candidates.append((PEIRCE, (i, p, p), shift))
    return candidates


def _apply(A: SuperAlgebra, kind: str, entry: Tuple[int, int, int], value: Fraction) -> SuperAlgebra:
    table = A.table.copy()
    i, j, k = entry
    table[i, j, k] = value
    if kind == PEIRCE:
        table[j, i, k] = value
    return SuperAlgebra(A.m, A.n, table, name=f"{A.name or 'algebra'} (mutated)")


def mutations(A: SuperAlgebra, count: int, seed: int) -> List[Mutation]:
    """
    Draw up to count distinct mutations of A with a seeded generator.

    Algebras without any graded product slot (type (0, n)) have none.
    """
    candidates = mutation_candidates(A)
    rng = random.Random(f"{seed}:{A.name}")
    chosen = rng.sample(candidates, min(count, len(candidates)))
    logger.debug(f"{len(chosen)} of {len(candidates)} mutations drawn for {A.name or 'algebra'}")
    return [Mutation(kind, entry, value, _apply(A, kind, entry, value)) for kind, entry, value in chosen]
