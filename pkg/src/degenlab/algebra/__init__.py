# -*- coding: utf-8 -*-

"""
degenlab algebra module

Superalgebras given by structure constants, the graded basis-change action,
graded powers, and the derived constructions used by the invariants.
"""

from .superalgebra import (
    SuperAlgebra,
    GradedBasisChange,
    PowerProfile,
    basis_labels,
    label_index,
)
from .constructions import (
    product,
    change_basis,
    power_profile,
    even_part,
    annex,
    direct_sum,
    forget_grading,
    is_supercommutative,
    supercommutativity_violation,
)

__all__ = [
    "SuperAlgebra",
    "GradedBasisChange",
    "PowerProfile",
    "basis_labels",
    "label_index",
    "product",
    "change_basis",
    "power_profile",
    "even_part",
    "annex",
    "direct_sum",
    "forget_grading",
    "is_supercommutative",
    "supercommutativity_violation",
]
