"""
degenlab degeneration module

Parametrized bases, transport of structure constants to t = 0, witness
verification and bounded witness search.
"""

from .witness import DegenerationWitness, new_basis_labels, ERRATUM, CORRECTION
from .transport import TransportResult, transport, limit_matches
from .verify import (
    DegenerationVerdict,
    verify_degeneration,
    verify_pair,
    VERIFIED,
    LIMIT_MISSING,
    WRONG_LIMIT,
)
from .search import search_witness, exponent_order, DIAGONAL, TRIANGULAR, DEFAULT_COEFFICIENTS

__all__ = [
    "DegenerationWitness",
    "new_basis_labels",
    "ERRATUM",
    "CORRECTION",
    "TransportResult",
    "transport",
    "limit_matches",
    "DegenerationVerdict",
    "verify_degeneration",
    "verify_pair",
    "VERIFIED",
    "LIMIT_MISSING",
    "WRONG_LIMIT",
    "search_witness",
    "exponent_order",
    "DIAGONAL",
    "TRIANGULAR",
    "DEFAULT_COEFFICIENTS",
]
