"""
Exception hierarchy for degenlab.

Every failure raised by the library derives from DegenlabError so callers
(and the CLI) can catch the whole family at once. Value-like failures also
derive from ValueError, lookup failures from KeyError.
"""

from typing import Optional, Tuple


class DegenlabError(Exception):
    """Base class for all degenlab errors."""


# exact_arith

class ZeroInput(DegenlabError, ValueError):
    """An operation that needs a nonzero argument received zero."""


class ZeroDenominator(DegenlabError, ValueError):
    """A ratio was requested against the zero polynomial."""


class RaggedInput(DegenlabError, ValueError):
    """Rows of a matrix do not share one length."""


class ParseError(DegenlabError, ValueError):
    """Text could not be parsed as a scalar or Laurent polynomial."""


class SingularMatrix(DegenlabError, ValueError):
    """A matrix that must be invertible has zero determinant."""


# superalgebra_core

class DimensionMismatch(DegenlabError, ValueError):
    """Operands do not fit the dimensions of the algebra."""


class MalformedAlgebra(DegenlabError, ValueError):
    """Structure constants violate the grading or the supercommutative completion."""


class NonzeroOddOddProducts(DegenlabError, ValueError):
    """The grading cannot be forgotten because odd-odd products are nonzero."""


class IndexOutOfRange(DegenlabError, ValueError):
    """A basis index, generator index or slot is outside its range."""


# degeneration / certificates

class SingularWitness(DegenlabError, ValueError):
    """A parametrized basis has a block with zero determinant."""


class MalformedCertificate(DegenlabError, ValueError):
    """A certificate document does not describe a valid obstruction."""


class ReductionUndefined(DegenlabError, ValueError):
    """A reduction certificate cannot be applied to the given pair."""


# catalog

class UnknownName(DegenlabError, KeyError):
    """No catalog entry carries the requested name."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown name"


class AmbiguousName(DegenlabError, KeyError):
    """A bare name matches entries in several varieties."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "ambiguous name"


class FixtureError(DegenlabError):
    """A fixture file is missing or does not match its schema."""


# variety_graph

class GraphError(DegenlabError):
    """Base class for failures while assembling a degeneration graph."""

    def __init__(self, message: str, pair: Optional[Tuple[str, str]] = None,
                 node: Optional[str] = None):
        super().__init__(message)
        self.pair = pair
        self.node = node


class Inconsistent(GraphError):
    """A pair is both a verified degeneration and a certified non-degeneration."""

    def __init__(self, pair: Tuple[str, str], detail: str = ""):
        message = f"Inconsistent pair {pair[0]} -> {pair[1]}"
        if detail:
            message += f": {detail}"
        super().__init__(message, pair=pair)


class Undecided(GraphError):
    """An ordered pair is neither a degeneration nor a non-degeneration."""

    def __init__(self, pair: Tuple[str, str]):
        super().__init__(f"Undecided pair {pair[0]} -> {pair[1]}", pair=pair)


class CoverFailure(GraphError):
    """A node lies in no closure of a rigid node."""

    def __init__(self, node: str):
        super().__init__(f"Node {node} is not covered by any component", node=node)


# cli

class UsageError(DegenlabError):
    """Command-line arguments are invalid."""
