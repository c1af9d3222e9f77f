"""
Search of the built-in obstruction toolkit for a non-degeneration certificate.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.certificates.check import check_certificate
from degenlab.certificates.model import (
    AssociativePI,
    AutDim,
    BurdeMismatch,
    PowerDim,
    REDUCTIONS,
)
from degenlab.errors import ReductionUndefined
from degenlab.invariants.profile import BURDE_INDICES, R_MAX

logger = logging.getLogger(__name__)


def toolkit(r_max: int = R_MAX, burde_indices: Sequence[Tuple[int, int]] = BURDE_INDICES) -> List:
    """Base certificates in the order they are tried."""
    certificates: List = [PowerDim(r=r, parity=p) for r in range(1, r_max + 1) for p in (0, 1)]
    certificates.append(AutDim())
    certificates.append(AssociativePI())
    certificates.extend(BurdeMismatch(i=i, j=j) for i, j in burde_indices)
    return certificates


def auto_certify(A: SuperAlgebra, B: SuperAlgebra, r_max: int = R_MAX,
                 burde_indices: Sequence[Tuple[int, int]] = BURDE_INDICES):
    """
    First toolkit certificate that checks Valid for A -/-> B.

    Base certificates are tried first, then the even-part, annex and
    ungraded reductions of each of them.

    Returns:
        The certificate, or None when the toolkit does not separate the pair
    """
    base = toolkit(r_max, burde_indices)
    for certificate in base:
        if check_certificate(A, B, certificate).valid:
            logger.debug(f"{A.name} -/-> {B.name}: {certificate.describe()}")
            return certificate
    for reduction in REDUCTIONS:
        for inner in base:
            certificate = reduction(inner=inner)
            try:
                verdict = check_certificate(A, B, certificate)
            except ReductionUndefined:
                break
            if verdict.valid:
                logger.debug(f"{A.name} -/-> {B.name}: {certificate.describe()}")
                return certificate
    logger.debug(f"{A.name} -/-> {B.name}: no toolkit certificate")
    return None
