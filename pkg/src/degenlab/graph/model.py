"""
The decided degeneration order on one variety.

Edges are proper degenerations closed under transitivity; non-edges are
certified non-degenerations closed under the rule

    A -/-> C,  A -> X,  Y -> C   =>   X -/-> Y

Every ordered pair of distinct nodes must end up in exactly one of the two.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from degenlab.errors import Inconsistent, Undecided, UnknownName

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]
Resolver = Callable[[str, str], Optional[Any]]

ZERO_PROVENANCE = "zero algebra"
TRANSITIVE_PROVENANCE = "transitive"
AUT_DIM_PROVENANCE = "AutDim"


def zero_algebra_name(variety: Tuple[int, int]) -> str:
    m, n = variety
    return f"C^{{{m},{n}}}"


@dataclass
class DegenerationGraph:
    variety: Tuple[int, int]
    nodes: List[str]
    edges: Dict[Pair, str] = field(default_factory=dict)
    non_edges: Dict[Pair, str] = field(default_factory=dict)
    ranks: Dict[str, int] = field(default_factory=dict)

    @property
    def zero(self) -> str:
        return zero_algebra_name(self.variety)

    def degenerates(self, source: str, target: str) -> bool:
        return source == target or (source, target) in self.edges

    def order(self, pairs: Iterable[Pair]) -> List[Pair]:
        """Sort pairs by node (table) order."""
        position = {name: k for k, name in enumerate(self.nodes)}
        return sorted(pairs, key=lambda p: (position[p[0]], position[p[1]]))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for name in self.nodes:
            graph.add_node(name, rank=self.ranks.get(name))
        for (source, target), provenance in self.edges.items():
            graph.add_edge(source, target, provenance=provenance)
        return graph

    def to_dict(self, edges: Optional[Sequence[Pair]] = None) -> Dict[str, Any]:
        shown = self.order(self.edges) if edges is None else self.order(edges)
        return {
            "variety": list(self.variety),
            "nodes": list(self.nodes),
            "ranks": {name: self.ranks[name] for name in self.nodes if name in self.ranks},
            "edges": [{"source": s, "target": t, "provenance": self.edges.get((s, t), TRANSITIVE_PROVENANCE)}
                      for s, t in shown],
            "non_edges": [{"source": s, "target": t, "certificate": self.non_edges[(s, t)]}
                          for s, t in self.order(self.non_edges)],
        }


def _closure(nodes: Sequence[str], edges: Mapping[Pair, str]) -> Dict[Pair, str]:
    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from(edges)
    closed = nx.transitive_closure(graph, reflexive=False)
    result = dict(edges)
    for pair in closed.edges():
        result.setdefault(pair, TRANSITIVE_PROVENANCE)
    return result


def _propagate(g: DegenerationGraph) -> None:
    """Push every non-edge down the order: sources forward, targets backward."""
    successors: Dict[str, List[str]] = {name: [name] for name in g.nodes}
    predecessors: Dict[str, List[str]] = {name: [name] for name in g.nodes}
    for source, target in g.order(g.edges):
        successors[source].append(target)
        predecessors[target].append(source)
    for (source, target), reason in list(g.non_edges.items()):
        for x in successors[source]:
            for y in predecessors[target]:
                if x != y and (x, y) not in g.non_edges:
                    g.non_edges[(x, y)] = f"derived from {source} -/-> {target}"


def _check_consistency(g: DegenerationGraph) -> None:
    for source, target in g.order(g.edges):
        if source == target:
            raise Inconsistent((source, target), "cycle in the degeneration order")
        if (target, source) in g.edges:
            raise Inconsistent((source, target), "mutual degenerations between distinct algebras")
        if (source, target) in g.non_edges:
            raise Inconsistent((source, target), f"verified, but {g.non_edges[(source, target)]}")


def _undecided(g: DegenerationGraph) -> List[Pair]:
    return [(a, b) for a in g.nodes for b in g.nodes
            if a != b and (a, b) not in g.edges and (a, b) not in g.non_edges]


def assemble(variety: Tuple[int, int], nodes: Sequence[str], witnesses: Iterable,
             certificates: Iterable, ranks: Optional[Mapping[str, int]] = None,
             resolver: Optional[Resolver] = None) -> DegenerationGraph:
    """
    Decide every ordered pair of a variety from verified facts.

    Args:
        variety: (m, n)
        nodes: Algebra names in table order; the zero algebra is appended if absent
        witnesses: Verified degenerations (objects with source, target, provenance)
        certificates: Passing non-degenerations (objects with source, target,
            certificate, provenance)
        ranks: Derivation dimensions; enables the automatic AutDim non-edges
            der(A) >= der(B)
        resolver: Called as resolver(source, target) for pairs still open;
            returns a certificate or None

    Returns:
        DegenerationGraph: closed, consistent and complete

    Raises:
        Inconsistent: If a pair is both decided ways, or the order has a cycle
        Undecided: If some pair stays open
        UnknownName: If a fact names an algebra outside nodes
    """
    zero = zero_algebra_name(variety)
    node_list = list(nodes)
    if zero not in node_list:
        node_list.append(zero)
    known = set(node_list)
    g = DegenerationGraph(variety=tuple(variety), nodes=node_list, ranks=dict(ranks or {}))

    def require(name: str) -> None:
        if name not in known:
            raise UnknownName(f"{name} is not an algebra of variety {variety}")

    base: Dict[Pair, str] = {}
    for w in witnesses:
        require(w.source)
        require(w.target)
        base.setdefault((w.source, w.target), f"witness ({w.provenance})")
    for name in node_list:
        if name != zero:
            base.setdefault((name, zero), ZERO_PROVENANCE)
    g.edges = _closure(node_list, base)

    for c in certificates:
        require(c.source)
        require(c.target)
        g.non_edges.setdefault((c.source, c.target), f"{c.certificate.describe()} ({c.provenance})")
    if ranks:
        for a in node_list:
            for b in node_list:
                if a != b and a in g.ranks and b in g.ranks and g.ranks[a] >= g.ranks[b]:
                    g.non_edges.setdefault((a, b), f"{AUT_DIM_PROVENANCE} (der {g.ranks[a]} >= {g.ranks[b]})")

    _propagate(g)
    _check_consistency(g)

    open_pairs = _undecided(g)
    if open_pairs and resolver is not None:
        for source, target in open_pairs:
            if (source, target) in g.non_edges:
                continue
            certificate = resolver(source, target)
            if certificate is not None:
                g.non_edges[(source, target)] = f"{certificate.describe()} (auto)"
                _propagate(g)
        _check_consistency(g)
        open_pairs = _undecided(g)
    if open_pairs:
        raise Undecided(open_pairs[0])

    logger.info(f"Variety {variety}: {len(g.nodes)} nodes, {len(g.edges)} degenerations, "
                f"{len(g.non_edges)} non-degenerations")
    return g


def primary_edges(g: DegenerationGraph) -> List[Pair]:
    """Transitive reduction of the proper degeneration order, in node order."""
    reduced = nx.transitive_reduction(g.to_networkx())
    return g.order(reduced.edges())


def rank_violations(g: DegenerationGraph) -> List[Pair]:
    """Proper edges A -> B with der(A) >= der(B)."""
    return [(a, b) for a, b in g.order(g.edges)
            if a in g.ranks and b in g.ranks and g.ranks[a] >= g.ranks[b]]
