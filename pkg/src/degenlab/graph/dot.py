"""
Graphviz DOT rendering of a degeneration graph.

Nodes sharing a derivation dimension sit on one rank, so the picture reads
top-down from rigid algebras to the zero algebra.
"""

from itertools import groupby

from graphviz import Digraph

from degenlab.graph.model import DegenerationGraph, primary_edges

PRIMARY = "primary"
CLOSURE = "closure"
MODES = (PRIMARY, CLOSURE)


def to_digraph(g: DegenerationGraph, mode: str = PRIMARY) -> Digraph:
    """
    Build a graphviz Digraph of g.

    Args:
        g: An assembled graph
        mode: "primary" for the transitive reduction, "closure" for every
            proper degeneration

    Raises:
        ValueError: On an unknown mode
    """
    if mode not in MODES:
        raise ValueError(f"Unknown DOT mode {mode!r}; expected one of {MODES}")
    m, n = g.variety
    edges = primary_edges(g) if mode == PRIMARY else g.order(g.edges)
    dot = Digraph(name=f"JS_{m}_{n}", graph_attr={"rankdir": "TB"},
                  node_attr={"shape": "box", "style": "rounded"})
    for name in g.nodes:
        rank = g.ranks.get(name)
        dot.node(name, label=name if rank is None else f"{name}\\nder={rank}")
    ranked = sorted((name for name in g.nodes if name in g.ranks), key=lambda x: (g.ranks[x], g.nodes.index(x)))
    for _, group in groupby(ranked, key=lambda x: g.ranks[x]):
        with dot.subgraph() as same:
            same.attr(rank="same")
            for name in group:
                same.node(name)
    for source, target in edges:
        dot.edge(source, target)
    return dot


def emit_dot(g: DegenerationGraph, mode: str = PRIMARY) -> str:
    """DOT text of g, identical for identical graphs."""
    return to_digraph(g, mode).source
