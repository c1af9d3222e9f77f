"""
Aggregated degeneration invariants of a superalgebra.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from degenlab.algebra.constructions import annex, even_part, power_profile
from degenlab.algebra.superalgebra import PowerProfile, SuperAlgebra
from degenlab.identities.jordan import check_associative
from degenlab.invariants.burde import BurdeResult, burde_invariant
from degenlab.invariants.cache import cached
from degenlab.invariants.derivations import derivation_dimension

logger = logging.getLogger(__name__)

R_MAX = 4
BURDE_INDICES = ((1, 1), (1, 2), (2, 2))


def cached_power_profile(A: SuperAlgebra, r_max: int = R_MAX) -> PowerProfile:
    return cached("power_profile", A, lambda: power_profile(A, r_max), r_max)


def is_associative(A: SuperAlgebra) -> bool:
    return cached("associative", A, lambda: bool(check_associative(A)))


@dataclass(frozen=True)
class InvariantProfile:
    name: Optional[str]
    dims: tuple
    power_profile: PowerProfile
    derivation_dim: int
    associative: bool
    burde_11: BurdeResult
    burde_12: BurdeResult
    burde_22: BurdeResult
    annex_power_profile: PowerProfile
    even_part_profile: Optional["InvariantProfile"] = None

    def burde(self, i: int, j: int) -> BurdeResult:
        return {(1, 1): self.burde_11, (1, 2): self.burde_12, (2, 2): self.burde_22}[(i, j)]

    def separating_key(self) -> tuple:
        """Invariants that differ only between non-isomorphic algebras."""
        return (
            self.power_profile.dims,
            self.associative,
            tuple((b.status, b.value, b.reason) for b in (self.burde_11, self.burde_12, self.burde_22)),
            self.annex_power_profile.dims,
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "dims": list(self.dims),
            "power_profile": self.power_profile.to_list(),
            "derivation_dim": self.derivation_dim,
            "associative": self.associative,
            "burde_11": self.burde_11.to_dict(),
            "burde_12": self.burde_12.to_dict(),
            "burde_22": self.burde_22.to_dict(),
            "annex_power_profile": self.annex_power_profile.to_list(),
        }
        if self.even_part_profile is not None:
            data["even_part_profile"] = self.even_part_profile.to_dict()
        return data


def invariant_profile(A: SuperAlgebra, include_even_part: bool = True) -> InvariantProfile:
    """
    Assemble every invariant used by the non-degeneration certificates.

    Args:
        A: The superalgebra
        include_even_part: Also profile (J)_0 (not recursed further)

    Returns:
        InvariantProfile: power profile up to r = 4, derivation dimension,
        associativity, Burde values at (1,1), (1,2), (2,2), the annex power
        profile and optionally the even-part profile
    """
    logger.debug(f"Profiling {A.name or 'algebra'} of type {A.dims}")
    even_profile = None
    if include_even_part:
        even_profile = invariant_profile(even_part(A), include_even_part=False)
    return InvariantProfile(
        name=A.name,
        dims=A.dims,
        power_profile=cached_power_profile(A),
        derivation_dim=derivation_dimension(A),
        associative=is_associative(A),
        burde_11=burde_invariant(A, 1, 1),
        burde_12=burde_invariant(A, 1, 2),
        burde_22=burde_invariant(A, 2, 2),
        annex_power_profile=cached_power_profile(annex(A)),
        even_part_profile=even_profile,
    )
