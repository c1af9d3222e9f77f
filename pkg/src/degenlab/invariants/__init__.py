# -*- coding: utf-8 -*-

"""
degenlab invariants module

Derivation dimensions, Burde invariants and aggregated invariant profiles,
memoized in a thread-safe module cache.
"""

from .cache import cached, invalidate_cache, get_cache_stats, set_cache_size
from .derivations import derivation_dimension, derivation_equations, derivation_unknowns
from .burde import (
    BurdeResult,
    burde_invariant,
    burde_polynomials,
    DEFINED,
    UNDEFINED,
    DENOMINATOR_ZERO,
    NUMERATOR_ZERO,
    NOT_CONSTANT,
)
from .profile import (
    InvariantProfile,
    invariant_profile,
    cached_power_profile,
    is_associative,
    BURDE_INDICES,
    R_MAX,
)

__all__ = [
    "cached",
    "invalidate_cache",
    "get_cache_stats",
    "set_cache_size",
    "derivation_dimension",
    "derivation_equations",
    "derivation_unknowns",
    "BurdeResult",
    "burde_invariant",
    "burde_polynomials",
    "DEFINED",
    "UNDEFINED",
    "DENOMINATOR_ZERO",
    "NUMERATOR_ZERO",
    "NOT_CONSTANT",
    "InvariantProfile",
    "invariant_profile",
    "cached_power_profile",
    "is_associative",
    "BURDE_INDICES",
    "R_MAX",
]
