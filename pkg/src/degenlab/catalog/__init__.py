# -*- coding: utf-8 -*-

"""
degenlab Catalog module

The classification data as fixtures: the algebras of each variety, the
degeneration witnesses, the non-degeneration certificates and the
published graph results. The bundled fixtures live in data/*.yaml; a
directory (or http base URL) written by Catalog.export can replace them
through the DEGENLAB_CATALOG environment variable.
"""

import logging
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.certificates.model import CertifiedPair
from degenlab.degeneration.witness import DegenerationWitness
from degenlab.errors import AmbiguousName, DegenlabError, FixtureError, UnknownName
from degenlab.io_tools import is_url, save_json
from degenlab.io_tools.schemas import (
    AlgebraDocument,
    BurdeExpectation,
    CertificateDocument,
    PublishedDocument,
    PublishedVariety,
    WitnessDocument,
    load_document,
)

logger = logging.getLogger(__name__)

CATALOG_ENV = "DEGENLAB_CATALOG"
DATA_DIR = Path(__file__).parent / "data"

WITNESSES = "witnesses"
CERTIFICATES = "certificates"
FIXTURE_KINDS = (WITNESSES, CERTIFICATES)

DOCUMENTS = ("algebras", "witnesses", "certificates", "published")

Variety = Tuple[int, int]


class _AlgebraList(BaseModel):
    algebras: List[AlgebraDocument]


class _WitnessList(BaseModel):
    witnesses: List[WitnessDocument]


class _CertificateList(BaseModel):
    certificates: List[CertificateDocument]


def parse_variety(text: str) -> Variety:
    """Parse "m,n" into (m, n)."""
    try:
        m, n = (int(part) for part in str(text).split(","))
    except ValueError:
        raise ValueError(f"Variety must be written m,n, got {text!r}")
    if m < 0 or n < 0:
        raise ValueError(f"Variety entries must be non-negative, got {text!r}")
    return m, n


def split_name(name: str) -> Tuple[str, Optional[Variety]]:
    """Split a qualified name "S_1^2@2,1" into ("S_1^2", (2, 1))."""
    if "@" not in name:
        return name, None
    bare, _, variety = name.rpartition("@")
    return bare, parse_variety(variety)


def qualified_name(name: str, variety: Variety) -> str:
    return f"{name}@{variety[0]},{variety[1]}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    variety: Variety
    algebra: SuperAlgebra
    expected_aut_dim: Optional[int] = None
    expected_type: Optional[str] = None
    expected_burde: Dict[Tuple[int, int], BurdeExpectation] = field(default_factory=dict)
    source: Optional[str] = None

    @property
    def qualified_name(self) -> str:
        return qualified_name(self.name, self.variety)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "variety": list(self.variety),
            "source": self.source,
            "products": self.algebra.products(),
            "aut_dim": self.expected_aut_dim,
            "type": self.expected_type,
            "burde": {f"{i},{j}": e.model_dump(exclude_none=True)
                      for (i, j), e in sorted(self.expected_burde.items())},
        }


def _burde_key(key: str) -> Tuple[int, int]:
    i, j = (int(part) for part in key.split(","))
    return i, j


def _entry(doc: AlgebraDocument) -> CatalogEntry:
    try:
        algebra = doc.to_algebra()
        burde = {_burde_key(k): v for k, v in doc.burde.items()}
    except (DegenlabError, ValueError) as e:
        raise FixtureError(f"Catalog entry {doc.name}: {e}") from e
    return CatalogEntry(
        name=doc.name,
        variety=tuple(doc.dims),
        algebra=algebra,
        expected_aut_dim=doc.aut_dim,
        expected_type=doc.type,
        expected_burde=burde,
        source=doc.source,
    )


class Catalog:
    """
    Algebras and fixtures of every variety.

    Names are unique within a variety only; a bare name that occurs in
    several varieties must be qualified ("S_1^2@2,1") or looked up with
    an explicit variety.
    """

    def __init__(self, algebras: List[AlgebraDocument], witnesses: List[WitnessDocument],
                 certificates: List[CertificateDocument], published: Optional[PublishedDocument] = None,
                 location: Optional[str] = None):
        self.location = location
        self._entries: List[CatalogEntry] = []
        self._index: Dict[Tuple[str, Variety], CatalogEntry] = {}
        for doc in algebras:
            entry = _entry(doc)
            key = (entry.name, entry.variety)
            if key in self._index:
                raise FixtureError(f"Catalog entry {entry.qualified_name} listed twice")
            self._index[key] = entry
            self._entries.append(entry)
        self._witness_docs = list(witnesses)
        self._certificate_docs = list(certificates)
        self._published = published or PublishedDocument(varieties=[])
        self._fixtures: Dict[str, List[Any]] = {}
        logger.debug(f"Catalog {location or '(in memory)'}: {len(self._entries)} algebras, "
                     f"{len(self._witness_docs)} witnesses, {len(self._certificate_docs)} certificates")

    # loading

    @classmethod
    def from_directory(cls, location: Union[str, Path]) -> "Catalog":
        """
        Load a catalog directory or http base URL.

        Each document is read from <kind>.json when present, else from
        <kind>.yaml; a base URL is read as <url>/<kind>.json.

        Raises:
            FileNotFoundError: If a required document is missing
            FixtureError: If a document does not match its schema
            requests.RequestException: If a remote document cannot be fetched
        """
        documents = {}
        for kind in DOCUMENTS:
            source = _document_location(location, kind)
            if source is None:
                if kind == "published":
                    documents[kind] = None
                    continue
                raise FileNotFoundError(f"No {kind}.json or {kind}.yaml in {location}")
            documents[kind] = source
        published = load_document(documents["published"], PublishedDocument) if documents["published"] else None
        return cls(
            load_document(documents["algebras"], _AlgebraList).algebras,
            load_document(documents["witnesses"], _WitnessList).witnesses,
            load_document(documents["certificates"], _CertificateList).certificates,
            published,
            location=str(location),
        )

    # lookup

    @property
    def entries(self) -> List[CatalogEntry]:
        return list(self._entries)

    @property
    def varieties(self) -> List[Variety]:
        seen: List[Variety] = []
        for entry in self._entries:
            if entry.variety not in seen:
                seen.append(entry.variety)
        return seen

    def get(self, name: str, variety: Optional[Variety] = None) -> CatalogEntry:
        """
        Look up an entry by name, optionally qualified as "name@m,n".

        Raises:
            UnknownName: If no entry matches
            AmbiguousName: If a bare name matches entries of several varieties
        """
        bare, qualified = split_name(name)
        if qualified is not None:
            if variety is not None and tuple(variety) != qualified:
                raise UnknownName(f"{name} is not in variety {tuple(variety)}")
            variety = qualified
        if variety is not None:
            entry = self._index.get((bare, tuple(variety)))
            if entry is None:
                raise UnknownName(f"No algebra {bare} in variety {tuple(variety)}")
            return entry
        matches = [e for e in self._entries if e.name == bare]
        if not matches:
            raise UnknownName(f"No algebra named {bare}")
        if len(matches) > 1:
            options = ", ".join(e.qualified_name for e in matches)
            raise AmbiguousName(f"{bare} occurs in several varieties; use one of {options}")
        return matches[0]

    def algebra(self, name: str, variety: Optional[Variety] = None) -> SuperAlgebra:
        return self.get(name, variety).algebra

    def list(self, variety: Variety) -> List[CatalogEntry]:
        """All entries of a variety, zero algebra included, in table order."""
        return [e for e in self._entries if e.variety == tuple(variety)]

    def resolve_variety(self, source: str, target: str) -> Variety:
        """
        The unique variety containing both names.

        Raises:
            UnknownName: If no variety contains both
            AmbiguousName: If several do
        """
        source, source_variety = split_name(source)
        target, target_variety = split_name(target)
        candidates = [v for v in self.varieties
                      if (source, v) in self._index and (target, v) in self._index
                      and source_variety in (None, v) and target_variety in (None, v)]
        if not candidates:
            raise UnknownName(f"No variety contains both {source} and {target}")
        if len(candidates) > 1:
            raise AmbiguousName(f"{source} and {target} occur together in {candidates}; give a variety")
        return candidates[0]

    # fixtures

    def fixtures(self, kind: str, variety: Optional[Variety] = None) -> List[Any]:
        """
        Witnesses (DegenerationWitness) or certificates (CertifiedPair) in
        file order, restricted to a variety when given.

        Raises:
            ValueError: On an unknown kind
            FixtureError: If a fixture does not parse
        """
        if kind not in FIXTURE_KINDS:
            raise ValueError(f"Unknown fixture kind {kind!r}, expected one of {FIXTURE_KINDS}")
        if kind not in self._fixtures:
            self._fixtures[kind] = self._parse_witnesses() if kind == WITNESSES else self._parse_certificates()
        values = self._fixtures[kind]
        if variety is None:
            return list(values)
        return [v for v in values if v.variety == tuple(variety)]

    def _parse_witnesses(self) -> List[DegenerationWitness]:
        result = []
        for doc in self._witness_docs:
            try:
                result.append(doc.to_witness())
            except (DegenlabError, ValueError) as e:
                raise FixtureError(f"Witness {doc.source} -> {doc.target} ({doc.provenance}): {e}") from e
        return result

    def _parse_certificates(self) -> List[CertifiedPair]:
        result = []
        for doc in self._certificate_docs:
            try:
                variety = tuple(doc.variety) if doc.variety else self.resolve_variety(doc.source, doc.target)
                result.append(doc.to_pair(variety))
            except (DegenlabError, ValueError) as e:
                raise FixtureError(f"Certificate {doc.source} -/-> {doc.target} ({doc.provenance}): {e}") from e
        return result

    def published(self, variety: Variety) -> Optional[PublishedVariety]:
        for entry in self._published.varieties:
            if tuple(entry.variety) == tuple(variety):
                return entry
        return None

    # export

    def documents(self) -> Dict[str, Any]:
        """Every fixture as a plain JSON-ready document, keyed by file name."""
        return {
            "algebras": {"algebras": [
                AlgebraDocument.from_algebra(
                    e.algebra, aut_dim=e.expected_aut_dim, type=e.expected_type, source=e.source,
                    burde={f"{i},{j}": b for (i, j), b in e.expected_burde.items()},
                ).model_dump(mode="json", exclude_none=True, exclude={"raw"})
                for e in self._entries]},
            "witnesses": {"witnesses": [
                WitnessDocument.from_witness(w).model_dump(mode="json", exclude_none=True)
                for w in self.fixtures(WITNESSES)]},
            "certificates": {"certificates": [
                CertificateDocument.from_pair(c).model_dump(mode="json", exclude_none=True)
                for c in self.fixtures(CERTIFICATES)]},
            "published": self._published.model_dump(mode="json"),
        }

    def export(self, directory: Union[str, Path]) -> List[Path]:
        """
        Write every fixture as <directory>/<kind>.json.

        Raises:
            FixtureError: If a file cannot be written
        """
        directory = Path(directory)
        written = []
        for kind, document in self.documents().items():
            path = directory / f"{kind}.json"
            if not save_json(document, path):
                raise FixtureError(f"Could not write {path}")
            written.append(path)
        logger.info(f"Exported catalog to {directory}")
        return written


def _document_location(location: Union[str, Path], kind: str) -> Optional[Union[str, Path]]:
    if is_url(location):
        return f"{str(location).rstrip('/')}/{kind}.json"
    for suffix in (".json", ".yaml"):
        path = Path(location) / f"{kind}{suffix}"
        if path.exists():
            return path
    return None


# Module-level catalog cache with thread safety
_catalog_cache: Dict[str, Catalog] = {}
_catalog_lock = threading.Lock()


def default_catalog(location: Optional[Union[str, Path]] = None) -> Catalog:
    """
    The catalog at location, $DEGENLAB_CATALOG, or the bundled data, loaded once.

    Raises:
        FileNotFoundError, FixtureError, requests.RequestException: As in Catalog.from_directory
    """
    if location is None:
        location = os.environ.get(CATALOG_ENV) or DATA_DIR
    key = str(location)
    with _catalog_lock:
        if key in _catalog_cache:
            return _catalog_cache[key]
    catalog = Catalog.from_directory(location)
    with _catalog_lock:
        return _catalog_cache.setdefault(key, catalog)


def clear_catalog_cache() -> None:
    with _catalog_lock:
        _catalog_cache.clear()


__all__ = [
    "Catalog",
    "CatalogEntry",
    "default_catalog",
    "clear_catalog_cache",
    "parse_variety",
    "split_name",
    "qualified_name",
    "WITNESSES",
    "CERTIFICATES",
]
