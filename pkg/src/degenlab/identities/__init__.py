# -*- coding: utf-8 -*-

"""
degenlab identities module

Grassmann envelope arithmetic, the Jordan superalgebra check and the
associativity check.
"""

from .grassmann import (
    GENERATORS,
    GrassmannElement,
    EnvelopeElement,
    grassmann_product,
    tagged_embed,
)
from .jordan import (
    IdentityReport,
    IdentityWitness,
    AssociativityReport,
    jordan_residual,
    residual_at,
    check_jordan_super,
    check_associative,
)
from .mutations import Mutation, mutation_candidates, mutations

__all__ = [
    "GENERATORS",
    "GrassmannElement",
    "EnvelopeElement",
    "grassmann_product",
    "tagged_embed",
    "IdentityReport",
    "IdentityWitness",
    "AssociativityReport",
    "jordan_residual",
    "residual_at",
    "check_jordan_super",
    "check_associative",
    "Mutation",
    "mutation_candidates",
    "mutations",
]
