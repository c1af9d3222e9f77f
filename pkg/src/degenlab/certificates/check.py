"""
Checking non-degeneration certificates against a pair of algebras.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

from degenlab.algebra.constructions import annex, even_part, forget_grading
from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.scalars import format_scalar
from degenlab.certificates.model import (
    AnnexReduction,
    AssociativePI,
    AutDim,
    BurdeMismatch,
    EvenPartReduction,
    ExternalFact,
    PowerDim,
    UngradedReduction,
    ensure_depth,
)
from degenlab.errors import MalformedCertificate, NonzeroOddOddProducts, ReductionUndefined
from degenlab.identities.jordan import check_associative
from degenlab.invariants.burde import burde_invariant
from degenlab.invariants.derivations import derivation_dimension
from degenlab.invariants.profile import R_MAX, cached_power_profile, invariant_profile, is_associative

logger = logging.getLogger(__name__)

VALID = "Valid"
INVALID = "Invalid"
ASSERTED_ONLY = "AssertedOnly"


@dataclass(frozen=True)
class CertificateVerdict:
    status: str
    reason: Optional[str] = None
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.status == VALID

    def passed(self, allow_external: bool = True) -> bool:
        return self.valid or (allow_external and self.status == ASSERTED_ONLY)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status, "evidence": self.evidence}
        if self.reason is not None:
            data["reason"] = self.reason
        return data


def _valid_if(condition: bool, evidence: Dict[str, Any], failure: str) -> CertificateVerdict:
    if condition:
        return CertificateVerdict(VALID, evidence=evidence)
    return CertificateVerdict(INVALID, reason=failure, evidence=evidence)


def _check_power_dim(A: SuperAlgebra, B: SuperAlgebra, c: PowerDim) -> CertificateVerdict:
    r_max = max(R_MAX, c.r)
    source = cached_power_profile(A, r_max).at(c.r)[c.parity]
    target = cached_power_profile(B, r_max).at(c.r)[c.parity]
    evidence = {"r": c.r, "parity": c.parity, "source_dim": source, "target_dim": target}
    return _valid_if(source < target, evidence,
                     f"dim (A^{c.r})_{c.parity} = {source} is not below dim (B^{c.r})_{c.parity} = {target}")


def _check_burde(A: SuperAlgebra, B: SuperAlgebra, c: BurdeMismatch) -> CertificateVerdict:
    source = burde_invariant(A, c.i, c.j)
    target = burde_invariant(B, c.i, c.j)
    evidence = {"i": c.i, "j": c.j, "source": source.to_dict(), "target": target.to_dict()}
    if not (source.defined and target.defined):
        return CertificateVerdict(INVALID, reason=f"c_({c.i},{c.j}) undefined: {source} vs {target}",
                                  evidence=evidence)
    return _valid_if(source.value != target.value, evidence,
                     f"c_({c.i},{c.j}) agrees: {format_scalar(source.value)}")


def _check_associative(A: SuperAlgebra, B: SuperAlgebra) -> CertificateVerdict:
    source = is_associative(A)
    target = check_associative(B)
    evidence: Dict[str, Any] = {"source_associative": source, "target_associative": target.associative}
    if target.witness is not None:
        evidence["target_witness"] = list(target.witness)
    if not source:
        return CertificateVerdict(INVALID, reason="source is not associative", evidence=evidence)
    return _valid_if(not target.associative, evidence, "target is associative")


def _distinct(A: SuperAlgebra, B: SuperAlgebra, top_level: bool) -> bool:
    """Whether A and B are known to be non-isomorphic."""
    if top_level and A.name and B.name:
        return A.name != B.name
    if A == B:
        return False
    return (invariant_profile(A, include_even_part=False).separating_key()
            != invariant_profile(B, include_even_part=False).separating_key())


def _check_aut_dim(A: SuperAlgebra, B: SuperAlgebra, top_level: bool) -> CertificateVerdict:
    source = derivation_dimension(A)
    target = derivation_dimension(B)
    evidence = {"source_der": source, "target_der": target}
    if source < target:
        return CertificateVerdict(INVALID, reason=f"der {source} < der {target}", evidence=evidence)
    if source > target:
        return CertificateVerdict(VALID, evidence=evidence)
    distinct = _distinct(A, B, top_level)
    evidence["distinct"] = distinct
    return _valid_if(distinct, evidence, "equal derivation dimensions and no separating invariant")


def _ungraded(A: SuperAlgebra) -> SuperAlgebra:
    try:
        return forget_grading(A)
    except NonzeroOddOddProducts as e:
        raise ReductionUndefined(str(e)) from e


_REDUCTIONS: Dict[type, Callable[[SuperAlgebra], SuperAlgebra]] = {
    EvenPartReduction: even_part,
    AnnexReduction: annex,
    UngradedReduction: _ungraded,
}


def _check(A: SuperAlgebra, B: SuperAlgebra, c, top_level: bool) -> CertificateVerdict:
    if isinstance(c, PowerDim):
        return _check_power_dim(A, B, c)
    if isinstance(c, BurdeMismatch):
        return _check_burde(A, B, c)
    if isinstance(c, AssociativePI):
        return _check_associative(A, B)
    if isinstance(c, AutDim):
        return _check_aut_dim(A, B, top_level)
    if isinstance(c, ExternalFact):
        return CertificateVerdict(ASSERTED_ONLY, reason=c.citation, evidence={"citation": c.citation})
    reduce = _REDUCTIONS.get(type(c))
    if reduce is None:
        raise MalformedCertificate(f"Unsupported certificate {c!r}")
    inner = _check(reduce(A), reduce(B), c.inner, top_level=False)
    evidence = {"reduction": c.kind, "inner": inner.to_dict()}
    return CertificateVerdict(inner.status, reason=inner.reason, evidence=evidence)


def check_certificate(A: SuperAlgebra, B: SuperAlgebra, c) -> CertificateVerdict:
    """
    Decide whether c proves that A does not degenerate to B.

    Args:
        A: The source algebra
        B: The target algebra
        c: A certificate model from degenlab.certificates.model

    Returns:
        CertificateVerdict: Valid, Invalid with a reason, or AssertedOnly
        for external facts

    Raises:
        MalformedCertificate: If c nests too deeply or is not a certificate
        ReductionUndefined: If an ungraded reduction meets odd-odd products
    """
    ensure_depth(c)
    verdict = _check(A, B, c, top_level=True)
    logger.debug(f"{A.name} -/-> {B.name} by {c.describe()}: {verdict.status}")
    return verdict
