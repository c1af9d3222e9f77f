"""
Bounded search for degeneration witnesses.

Two candidate shapes are enumerated in a fixed order, so the first hit is
reproducible:

* diagonal: graded permutation of the basis scaled by c * t^k
* triangular: a diagonal unit-coefficient basis plus one extra entry
  c * t^k inside the same parity block

Every hit is confirmed with verify_pair before it is returned.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.laurent import LaurentPoly
from degenlab.degeneration.transport import limit_matches
from degenlab.degeneration.verify import verify_pair
from degenlab.degeneration.witness import DegenerationWitness
from degenlab.errors import DimensionMismatch

logger = logging.getLogger(__name__)

DIAGONAL = "diagonal"
TRIANGULAR = "triangular"
SHAPES = (DIAGONAL, TRIANGULAR)

DEFAULT_COEFFICIENTS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                        Fraction(1, 2), Fraction(-1, 2))


def exponent_order(degree_bound: int) -> List[int]:
    """0, 1, -1, 2, -2, ... up to the bound."""
    order = [0]
    for k in range(1, degree_bound + 1):
        order.extend((k, -k))
    return order


def _graded_permutations(m: int, n: int) -> Iterator[Tuple[int, ...]]:
    for even in itertools.permutations(range(m)):
        for odd in itertools.permutations(range(n)):
            yield tuple(even) + tuple(m + p for p in odd)


def _witness(A: SuperAlgebra, B: SuperAlgebra, entries: Dict[Tuple[int, int], LaurentPoly]) -> DegenerationWitness:
    """entries maps (old index i, new index a) to P[i, a]."""
    m, n = A.dims
    zero = LaurentPoly()
    even = [[entries.get((i, a), zero) for i in range(m)] for a in range(m)]
    odd = [[entries.get((m + i, m + a), zero) for i in range(n)] for a in range(n)]
    return DegenerationWitness.from_rows(A.name or "A", B.name or "B", even, odd, provenance="search")


def _diagonal_candidates(A: SuperAlgebra, B: SuperAlgebra, exponents: Sequence[int],
                         coefficients: Sequence[Fraction]) -> Iterator[DegenerationWitness]:
    size = A.dim
    source = list(A.nonzero_entries())
    target = {(i, j, k): v for i, j, k, v in B.nonzero_entries()}
    for sigma in _graded_permutations(*A.dims):
        position = {old: new for new, old in enumerate(sigma)}
        for ks in itertools.product(exponents, repeat=size):
            # E_a = c_a t^k_a b_sigma(a): the constant T[s(a), s(b), s(c)] picks up
            # c_a c_b / c_c and t^(k_a + k_b - k_c)
            surviving: Dict[Tuple[int, int, int], Fraction] = {}
            feasible = True
            for i, j, k, value in source:
                a, b, c = position[i], position[j], position[k]
                power = ks[a] + ks[b] - ks[c]
                if power < 0:
                    feasible = False
                    break
                if power == 0:
                    surviving[(a, b, c)] = value
            if not feasible or surviving.keys() != target.keys():
                continue
            for cs in itertools.product(coefficients, repeat=size):
                if all(cs[a] * cs[b] / cs[c] * value == target[(a, b, c)]
                       for (a, b, c), value in surviving.items()):
                    yield _witness(A, B, {(sigma[a], a): LaurentPoly.monomial(cs[a], ks[a])
                                          for a in range(size)})


def _triangular_candidates(A: SuperAlgebra, B: SuperAlgebra, exponents: Sequence[int],
                           coefficients: Sequence[Fraction]) -> Iterator[DegenerationWitness]:
    m, n = A.dims
    size = A.dim
    for sigma in _graded_permutations(m, n):
        for ks in itertools.product(exponents, repeat=size):
            base = {(sigma[a], a): LaurentPoly.monomial(1, ks[a]) for a in range(size)}
            for a in range(size):
                block = range(m) if a < m else range(m, size)
                for i in block:
                    if i == sigma[a]:
                        continue
                    for c in coefficients:
                        for k in exponents:
                            entries = dict(base)
                            entries[(i, a)] = LaurentPoly.monomial(c, k)
                            candidate = _witness(A, B, entries)
                            if limit_matches(A, candidate, B):
                                yield candidate


def search_witness(A: SuperAlgebra, B: SuperAlgebra, degree_bound: int, shape: str,
                   coefficients: Optional[Sequence] = None) -> Optional[DegenerationWitness]:
    """
    Look for a witness of A -> B among bounded candidates.

    Args:
        A: Source algebra
        B: Target algebra of the same type
        degree_bound: Largest |k| used for exponents of t
        shape: "diagonal" or "triangular"
        coefficients: Scalars tried for c (defaults to 1, -1, 2, -2, 1/2, -1/2)

    Returns:
        DegenerationWitness or None: the first verified candidate

    Raises:
        DimensionMismatch: If A and B have different types
        ValueError: On an unknown shape or a negative bound
    """
    if A.dims != B.dims:
        raise DimensionMismatch(f"Cannot search {A.dims} -> {B.dims}")
    if shape not in SHAPES:
        raise ValueError(f"Unknown witness shape {shape!r}; expected one of {SHAPES}")
    if degree_bound < 0:
        raise ValueError("degree_bound must be non-negative")
    scalars = tuple(Fraction(c) for c in (coefficients or DEFAULT_COEFFICIENTS))
    exponents = exponent_order(degree_bound)
    generator = _diagonal_candidates if shape == DIAGONAL else _triangular_candidates
    logger.info(f"Searching {shape} witnesses {A.name} -> {B.name} with |k| <= {degree_bound}")
    tried = 0
    for candidate in generator(A, B, exponents, scalars):
        tried += 1
        if verify_pair(A, B, candidate).verified:
            logger.info(f"Found witness after {tried} confirmed candidates: {candidate.describe()}")
            return candidate
    logger.info(f"No {shape} witness {A.name} -> {B.name} within |k| <= {degree_bound}")
    return None
