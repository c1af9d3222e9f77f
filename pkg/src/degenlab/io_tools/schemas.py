"""
pydantic schemas for external documents and their conversion to library values.
"""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Type, TypeVar, Union

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, ValidationError, field_validator

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.certificates.model import CertifiedPair, parse_certificate
from degenlab.degeneration.witness import DegenerationWitness
from degenlab.errors import DimensionMismatch, FixtureError

Variety = Tuple[int, int]
Term = Tuple[str, Union[int, str]]

Model = TypeVar("Model", bound=BaseModel)


def _check_variety(v):
    if v is not None and (v[0] < 0 or v[1] < 0):
        raise ValueError("variety entries must be non-negative")
    return v


class BurdeExpectation(BaseModel):
    """What the classification table prints for c_(i,j) next to what is computed."""

    printed: Optional[str] = None
    computed: str
    flag: Optional[Literal["erratum"]] = None


class AlgebraDocument(BaseModel):
    """
    A superalgebra by its listed products. "dims" is the canonical key for
    (m, n); "variety" is read as well. raw skips the supercommutative completion.
    """

    name: str = Field(min_length=1)
    dims: Variety = Field(validation_alias=AliasChoices("dims", "variety"))
    products: Dict[str, List[Term]] = Field(default_factory=dict)
    aut_dim: Optional[int] = None
    type: Optional[Literal["associative", "non-associative"]] = None
    burde: Dict[str, BurdeExpectation] = Field(default_factory=dict)
    source: Optional[str] = None
    raw: bool = False

    @field_validator("dims")
    def dims_must_be_valid(cls, v):
        return _check_variety(v)

    def to_algebra(self, raw: Optional[bool] = None) -> SuperAlgebra:
        """Build the algebra; raw (default: the document's flag) keeps the products as listed."""
        m, n = self.dims
        raw = self.raw if raw is None else raw
        return SuperAlgebra.from_products(m, n, {k: [list(t) for t in v] for k, v in self.products.items()},
                                          name=self.name, complete=not raw)

    @classmethod
    def from_algebra(cls, A: SuperAlgebra, **kwargs) -> "AlgebraDocument":
        return cls(name=A.name or "algebra", dims=A.dims,
                   products={k: [tuple(t) for t in v] for k, v in A.products().items()}, **kwargs)


class WitnessDocument(BaseModel):
    source: str
    target: str
    even: List[List[Union[int, str]]] = Field(default_factory=list)
    odd: List[List[Union[int, str]]] = Field(default_factory=list)
    provenance: str = "derived"
    flag: Optional[Literal["erratum", "correction"]] = None
    variety: Optional[Variety] = None
    note: Optional[str] = None

    @field_validator("variety")
    def variety_must_be_valid(cls, v):
        return _check_variety(v)

    def to_witness(self) -> DegenerationWitness:
        """
        Raises:
            ParseError: On a malformed Laurent polynomial entry
            DimensionMismatch: If a block is not square or disagrees with variety
        """
        w = DegenerationWitness.from_rows(
            self.source, self.target,
            [[str(x) for x in row] for row in self.even],
            [[str(x) for x in row] for row in self.odd],
            provenance=self.provenance, flag=self.flag, note=self.note)
        if self.variety is not None and tuple(self.variety) != (w.change.m, w.change.n):
            raise DimensionMismatch(
                f"Witness {self.source} -> {self.target} has blocks of type {(w.change.m, w.change.n)}, "
                f"document says {tuple(self.variety)}")
        return w

    @classmethod
    def from_witness(cls, w: DegenerationWitness) -> "WitnessDocument":
        even, odd = w.rows()
        return cls(source=w.source, target=w.target, even=even, odd=odd, provenance=w.provenance,
                   flag=w.flag, variety=w.variety, note=w.note)


class CertificateDocument(BaseModel):
    """A pair plus the certificate fields (kind, r, parity, i, j, citation, inner)."""

    model_config = ConfigDict(extra="allow")

    source: str
    target: str
    kind: str
    provenance: str = "derived"
    variety: Optional[Variety] = None

    @field_validator("variety")
    def variety_must_be_valid(cls, v):
        return _check_variety(v)

    def certificate(self):
        """
        Raises:
            MalformedCertificate: If the certificate fields do not validate
        """
        return parse_certificate(self.model_dump())

    def to_pair(self, variety: Optional[Variety] = None) -> CertifiedPair:
        return CertifiedPair(self.source, self.target, self.certificate(), self.provenance,
                             tuple(self.variety) if self.variety else variety)

    @classmethod
    def from_pair(cls, pair: CertifiedPair) -> "CertificateDocument":
        fields = pair.certificate.model_dump()
        return cls(source=pair.source, target=pair.target, provenance=pair.provenance,
                   variety=pair.variety, **fields)


class PublishedVariety(BaseModel):
    """Printed results for one variety: primary edges, rigid set, component lists."""

    variety: Variety
    primary_edges: List[Tuple[str, str]]
    rigid: List[str]
    components: Dict[str, List[str]]
    component_errata: List[str] = Field(default_factory=list)


class PublishedDocument(BaseModel):
    varieties: List[PublishedVariety]


def load_document(location: Union[str, Path, Dict[str, Any]], model: Type[Model]) -> Model:
    """
    Load and validate a document.

    Args:
        location: File path, URL or an already parsed mapping
        model: The pydantic model to validate against

    Raises:
        FileNotFoundError, yaml.YAMLError, requests.RequestException: As in load_yaml
        FixtureError: If the document does not match the schema
    """
    from degenlab.io_tools import load_yaml

    data = location if isinstance(location, dict) else load_yaml(location)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise FixtureError(f"{location if not isinstance(location, dict) else 'document'} "
                           f"is not a valid {model.__name__}: {e}") from e
