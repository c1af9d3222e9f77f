"""
Assemble a variety's graph straight from catalog fixtures.
"""

import logging
from typing import List, Optional, Tuple

from degenlab.certificates.auto import auto_certify
from degenlab.certificates.check import check_certificate
from degenlab.certificates.model import CertifiedPair
from degenlab.degeneration.verify import verify_pair
from degenlab.degeneration.witness import DegenerationWitness
from degenlab.graph.model import DegenerationGraph, assemble
from degenlab.invariants.derivations import derivation_dimension

logger = logging.getLogger(__name__)


def _catalog(catalog):
    if catalog is None:
        from degenlab.catalog import default_catalog
        catalog = default_catalog()
    return catalog


def verified_witnesses(variety: Tuple[int, int], catalog=None) -> List[DegenerationWitness]:
    """Shipped witnesses of the variety whose transport limit is the target."""
    catalog = _catalog(catalog)
    result = []
    for w in catalog.fixtures("witnesses", variety):
        A = catalog.algebra(w.source, variety)
        B = catalog.algebra(w.target, variety)
        verdict = verify_pair(A, B, w)
        if verdict.verified:
            result.append(w)
        elif w.flag is None:
            logger.warning(f"Witness {w.source} -> {w.target} ({w.provenance}) fails: {verdict.status}")
        else:
            logger.debug(f"Skipping {w.flag} witness {w.source} -> {w.target}: {verdict.status}")
    return result


def passing_certificates(variety: Tuple[int, int], catalog=None,
                         allow_external: bool = True) -> List[CertifiedPair]:
    catalog = _catalog(catalog)
    result = []
    for c in catalog.fixtures("certificates", variety):
        A = catalog.algebra(c.source, variety)
        B = catalog.algebra(c.target, variety)
        verdict = check_certificate(A, B, c.certificate)
        if verdict.passed(allow_external):
            result.append(c)
        else:
            logger.warning(f"Certificate {c.describe()} does not pass: {verdict.reason}")
    return result


def build_graph(variety: Tuple[int, int], catalog=None, auto: bool = False,
                allow_external: bool = True) -> DegenerationGraph:
    """
    Verify the shipped facts of a variety and assemble its graph.

    Args:
        variety: (m, n)
        catalog: Catalog to read (the bundled one by default)
        auto: Let auto_certify settle pairs the fixtures leave open
        allow_external: Accept ExternalFact certificates

    Raises:
        Inconsistent, Undecided: As in assemble
    """
    catalog = _catalog(catalog)
    entries = catalog.list(variety)
    ranks = {e.name: derivation_dimension(e.algebra) for e in entries}
    resolver: Optional[object] = None
    if auto:
        def resolver(source: str, target: str):
            return auto_certify(catalog.algebra(source, variety), catalog.algebra(target, variety))
    return assemble(
        variety,
        [e.name for e in entries],
        verified_witnesses(variety, catalog),
        passing_certificates(variety, catalog, allow_external),
        ranks=ranks,
        resolver=resolver,
    )
