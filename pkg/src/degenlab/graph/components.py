"""
Rigid algebras and irreducible components from the closed order.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from degenlab.errors import CoverFailure
from degenlab.graph.model import DegenerationGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentReport:
    """Each component is (rigid node, closure of its orbit) in node order."""

    components: Tuple[Tuple[str, Tuple[str, ...]], ...]
    rigid_set: Tuple[str, ...]

    def closure(self, generator: str) -> Tuple[str, ...]:
        for rigid, members in self.components:
            if rigid == generator:
                return members
        raise KeyError(generator)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rigid_set": list(self.rigid_set),
            "components": [{"generator": rigid, "closure": list(members)}
                           for rigid, members in self.components],
        }


@dataclass(frozen=True)
class ComponentDiscrepancy:
    generator: str
    missing: Tuple[str, ...] = field(default_factory=tuple)
    extra: Tuple[str, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        parts = []
        if self.missing:
            parts.append(f"published list omits {', '.join(self.missing)}")
        if self.extra:
            parts.append(f"published list adds {', '.join(self.extra)}")
        return f"closure of {self.generator}: " + "; ".join(parts)


def components(g: DegenerationGraph) -> ComponentReport:
    """
    Rigid nodes are those with no incoming proper degeneration; each
    component is the closure of a rigid node.

    Raises:
        CoverFailure: If a node lies in no component
    """
    incoming = {target for _, target in g.edges}
    rigid = [name for name in g.nodes if name not in incoming]
    result = []
    covered = set()
    for generator in rigid:
        members = tuple(name for name in g.nodes if g.degenerates(generator, name))
        result.append((generator, members))
        covered.update(members)
    for name in g.nodes:
        if name not in covered:
            raise CoverFailure(name)
    logger.info(f"Variety {g.variety}: {len(rigid)} rigid algebras")
    return ComponentReport(components=tuple(result), rigid_set=tuple(rigid))


def component_discrepancies(report: ComponentReport,
                            published: Mapping[str, Sequence[str]]) -> List[ComponentDiscrepancy]:
    """Compare recomputed closures with published member lists (by generator)."""
    found = []
    for generator, members in report.components:
        listed = published.get(generator)
        if listed is None:
            found.append(ComponentDiscrepancy(generator, missing=members))
            continue
        missing = tuple(m for m in members if m not in listed)
        extra = tuple(m for m in listed if m not in members)
        if missing or extra:
            found.append(ComponentDiscrepancy(generator, missing=missing, extra=extra))
    for generator in published:
        if generator not in report.rigid_set:
            found.append(ComponentDiscrepancy(generator, extra=tuple(published[generator])))
    return found
