"""
Checking a degeneration witness against the target algebra.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.arith.scalars import format_scalar
from degenlab.degeneration.transport import TransportResult, transport
from degenlab.degeneration.witness import DegenerationWitness, new_basis_labels
from degenlab.errors import DimensionMismatch

logger = logging.getLogger(__name__)

VERIFIED = "Verified"
LIMIT_MISSING = "LimitMissing"
WRONG_LIMIT = "WrongLimit"


@dataclass(frozen=True)
class DegenerationVerdict:
    status: str
    source: str
    target: str
    entry: Optional[str] = None
    diff: Tuple[Tuple[str, str, str], ...] = field(default_factory=tuple)
    transport: Optional[TransportResult] = None

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self, show_transport: bool = False, dims: Optional[Tuple[int, int]] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status, "source": self.source, "target": self.target}
        if self.entry is not None:
            data["entry"] = self.entry
        if self.diff:
            data["diff"] = [{"entry": e, "expected": want, "limit": got} for e, want, got in self.diff]
        if show_transport and self.transport is not None and dims is not None:
            data.update(self.transport.to_dict(*dims))
        return data

    def __str__(self) -> str:
        if self.status == VERIFIED:
            return f"{self.source} -> {self.target}: verified"
        if self.status == LIMIT_MISSING:
            return f"{self.source} -> {self.target}: limit missing at {self.entry}"
        lines = [f"{self.source} -> {self.target}: wrong limit"]
        lines.extend(f"  {e}: expected {want}, got {got}" for e, want, got in self.diff)
        return "\n".join(lines)


def _entry_label(labels: List[str], a: int, b: int, c: int) -> str:
    return f"{labels[a]}.{labels[b]} -> {labels[c]}"


def verify_pair(A: SuperAlgebra, B: SuperAlgebra, w: DegenerationWitness) -> DegenerationVerdict:
    """
    Transport A along w and compare the limit with B entry by entry.

    Raises:
        SingularWitness: If w is singular
        DimensionMismatch: If w, A and B are not of one type
    """
    result = transport(A, w)
    labels = new_basis_labels(*A.dims)
    source = A.name or w.source
    target = B.name or w.target
    if result.limit is None:
        entry = _entry_label(labels, *result.missing)
        logger.debug(f"{source} -> {target}: pole at {entry}")
        return DegenerationVerdict(LIMIT_MISSING, source, target, entry=entry, transport=result)
    if result.limit.dims != B.dims:
        raise DimensionMismatch(f"Target {target} has type {B.dims}, witness gives {result.limit.dims}")
    diff = []
    for index in itertools.product(range(A.dim), repeat=3):
        got = result.limit.table[index]
        want = B.table[index]
        if got != want:
            diff.append((_entry_label(labels, *index), format_scalar(want), format_scalar(got)))
    if diff:
        logger.debug(f"{source} -> {target}: {len(diff)} constants differ")
        return DegenerationVerdict(WRONG_LIMIT, source, target, diff=tuple(diff), transport=result)
    return DegenerationVerdict(VERIFIED, source, target, transport=result)


def verify_degeneration(w: DegenerationWitness, catalog=None) -> DegenerationVerdict:
    """
    Verify a witness whose endpoints are named catalog algebras.

    Args:
        w: The witness; its variety disambiguates shared names
        catalog: Catalog to resolve names in (the bundled one by default)

    Returns:
        DegenerationVerdict: Verified, LimitMissing or WrongLimit
    """
    if catalog is None:
        from degenlab.catalog import default_catalog
        catalog = default_catalog()
    A = catalog.algebra(w.source, w.variety)
    B = catalog.algebra(w.target, w.variety)
    return verify_pair(A, B, w)
