"""
degenlab graph module

Assembly of the degeneration order on a variety, its transitive reduction,
rigid algebras, irreducible components and DOT rendering.
"""

from .model import (
    DegenerationGraph,
    assemble,
    primary_edges,
    rank_violations,
    zero_algebra_name,
)
from .components import ComponentReport, ComponentDiscrepancy, components, component_discrepancies
from .dot import emit_dot, to_digraph, PRIMARY, CLOSURE
from .build import build_graph, verified_witnesses, passing_certificates

__all__ = [
    "DegenerationGraph",
    "assemble",
    "primary_edges",
    "rank_violations",
    "zero_algebra_name",
    "ComponentReport",
    "ComponentDiscrepancy",
    "components",
    "component_discrepancies",
    "emit_dot",
    "to_digraph",
    "PRIMARY",
    "CLOSURE",
    "build_graph",
    "verified_witnesses",
    "passing_certificates",
]
