# -*- coding: utf-8 -*-

"""
degenlab exact arithmetic

Rational scalars, sparse multivariate polynomials, Laurent polynomials in t,
rational functions of t, and exact row reduction, all computed with sympy.
"""

from .scalars import Scalar, ScalarLike, parse_scalar, format_scalar, to_rational, from_rational
from .polynomials import MultiPoly, constant_ratio, polynomial_ring
from .laurent import LaurentPoly, RationalFunction, valuation_at_zero, limit_at_zero
from .linalg import (
    row_space_basis,
    rank,
    nullity,
    determinant,
    adjugate,
    inverse,
    fraction_matrix,
    identity_matrix,
)

__all__ = [
    "Scalar",
    "ScalarLike",
    "parse_scalar",
    "format_scalar",
    "to_rational",
    "from_rational",
    "MultiPoly",
    "constant_ratio",
    "polynomial_ring",
    "LaurentPoly",
    "RationalFunction",
    "valuation_at_zero",
    "limit_at_zero",
    "row_space_basis",
    "rank",
    "nullity",
    "determinant",
    "adjugate",
    "inverse",
    "fraction_matrix",
    "identity_matrix",
]
