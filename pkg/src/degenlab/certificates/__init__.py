"""
degenlab certificates module

Non-degeneration certificates, their checker and the automatic toolkit
search.
"""

from .model import (
    PowerDim,
    BurdeMismatch,
    AssociativePI,
    AutDim,
    ExternalFact,
    EvenPartReduction,
    AnnexReduction,
    UngradedReduction,
    NonDegenerationCertificate,
    REDUCTIONS,
    KINDS,
    parse_certificate,
    certificate_depth,
    certificate_to_dict,
    CertifiedPair,
)
from .check import CertificateVerdict, check_certificate, VALID, INVALID, ASSERTED_ONLY
from .auto import auto_certify, toolkit

__all__ = [
    "PowerDim",
    "BurdeMismatch",
    "AssociativePI",
    "AutDim",
    "ExternalFact",
    "EvenPartReduction",
    "AnnexReduction",
    "UngradedReduction",
    "NonDegenerationCertificate",
    "REDUCTIONS",
    "KINDS",
    "parse_certificate",
    "certificate_depth",
    "certificate_to_dict",
    "CertifiedPair",
    "CertificateVerdict",
    "check_certificate",
    "VALID",
    "INVALID",
    "ASSERTED_ONLY",
    "auto_certify",
    "toolkit",
]
