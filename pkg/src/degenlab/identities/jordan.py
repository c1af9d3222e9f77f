"""
Jordan superalgebra membership and associativity checks.

A superalgebra is Jordan iff its Grassmann envelope is a Jordan algebra.
The identity (x^2 y) x = x^2 (y x) is checked in the envelope with
x = c1*u1 + c2*u2 + c4*u4 and y = u3, where u_s is a basis vector tagged
with the generators of slot s and c1, c2, c4 are commuting indeterminates.
Every coefficient of every monomial in c1, c2, c4 must vanish for every
choice of four basis vectors.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from degenlab.algebra.constructions import supercommutativity_violation
from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.polynomials import MultiPoly, polynomial_ring
from degenlab.arith.scalars import format_scalar
from degenlab.identities.grassmann import EnvelopeElement, monomial_word, tagged_embed

logger = logging.getLogger(__name__)

COEFFICIENT_NAMES = ("c1", "c2", "c4")


@dataclass(frozen=True)
class IdentityWitness:
    """Where an identity check failed and what was left over."""

    kind: str
    basis: Tuple[str, ...]
    multidegree: Optional[Tuple[int, ...]] = None
    residual: Tuple[Tuple[str, Fraction], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": self.kind,
            "basis": list(self.basis),
            "residual": [[term, format_scalar(c)] for term, c in self.residual],
        }
        if self.multidegree is not None:
            data["multidegree"] = dict(zip(COEFFICIENT_NAMES, self.multidegree))
        return data


@dataclass(frozen=True)
class IdentityReport:
    passed: bool
    witness: Optional[IdentityWitness] = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.verdict}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


@dataclass(frozen=True)
class AssociativityReport:
    associative: bool
    witness: Optional[Tuple[str, str, str]] = None
    left: Optional[Tuple[Fraction, ...]] = None
    right: Optional[Tuple[Fraction, ...]] = None

    def __bool__(self) -> bool:
        return self.associative


def jordan_residual(A: SuperAlgebra, basis: Sequence) -> Dict[Tuple[Tuple[int, ...], int], MultiPoly]:
    """
    P(x, y) = ((x x) y) x - (x x)(y x) for the tagged basis vectors
    (b1, b2, b3, b4); returns the nonzero envelope terms.
    """
    if len(basis) != 4:
        raise ValueError("jordan_residual needs exactly four basis vectors")
    u = [tagged_embed(A, b, slot) for slot, b in enumerate(basis, start=1)]
    c1, c2, c4 = polynomial_ring(COEFFICIENT_NAMES)
    x = u[0].scale(c1) + u[1].scale(c2) + u[3].scale(c4)
    y = u[2]
    xx = x * x
    p = (xx * y) * x - xx * (y * x)
    return p.terms


def _witness_from_residual(A: SuperAlgebra, basis: Tuple[int, ...],
                           residual: Dict[Tuple[Tuple[int, ...], int], MultiPoly]) -> IdentityWitness:
    labels = A.labels
    multidegree = min(e for poly in residual.values() for e in poly.monomials())
    terms = []
    for (monomial, k), poly in sorted(residual.items()):
        c = poly.coefficient(multidegree)
        if c:
            terms.append((f"{monomial_word(monomial)}.{labels[k]}", c))
    return IdentityWitness(
        kind="jordan",
        basis=tuple(labels[b] for b in basis),
        multidegree=multidegree,
        residual=tuple(terms),
    )


def residual_at(A: SuperAlgebra, witness: IdentityWitness) -> Dict[str, Fraction]:
    """Re-evaluate a Jordan witness: the residual coefficients at its multidegree."""
    residual = jordan_residual(A, witness.basis)
    labels = A.labels
    values = {}
    for (monomial, k), poly in residual.items():
        c = poly.coefficient(witness.multidegree)
        if c:
            values[f"{monomial_word(monomial)}.{labels[k]}"] = c
    return values


def check_jordan_super(A: SuperAlgebra) -> IdentityReport:
    """
    Decide whether A is a Jordan superalgebra.

    Supercommutativity is checked first; a failure there is reported as a
    failed check with a commutativity witness.

    Args:
        A: The superalgebra

    Returns:
        IdentityReport: pass, or fail with the first failing basis tuple
    """
    violation = supercommutativity_violation(A)
    if violation is not None:
        i, j, k = violation
        labels = A.labels
        sign = -1 if (A.parity(i) and A.parity(j)) else 1
        gap = A.table[i, j, k] - sign * A.table[j, i, k]
        logger.debug(f"{A.name or 'algebra'} is not supercommutative at {labels[i]}{labels[j]}")
        return IdentityReport(False, IdentityWitness(
            kind="supercommutativity",
            basis=(labels[i], labels[j]),
            residual=((labels[k], gap),),
        ))
    for basis in itertools.product(range(A.dim), repeat=4):
        residual = jordan_residual(A, basis)
        if residual:
            witness = _witness_from_residual(A, basis, residual)
            logger.debug(f"{A.name or 'algebra'} fails the Jordan identity at {witness.basis}")
            return IdentityReport(False, witness)
    return IdentityReport(True)


def check_associative(A: SuperAlgebra) -> AssociativityReport:
    """
    (xy)z = x(yz) on all basis triples of A itself (ungraded products).

    Returns:
        AssociativityReport: truthy when associative; otherwise carries the
        first failing triple and both sides
    """
    table = A.table
    size = A.dim
    for i, j, l in itertools.product(range(size), repeat=3):
        left = [sum((table[i, j, s] * table[s, l, k] for s in range(size)), Fraction(0))
                for k in range(size)]
        right = [sum((table[j, l, s] * table[i, s, k] for s in range(size)), Fraction(0))
                 for k in range(size)]
        if left != right:
            labels = A.labels
            return AssociativityReport(False, (labels[i], labels[j], labels[l]),
                                       tuple(left), tuple(right))
    return AssociativityReport(True)
