"""
Non-degeneration certificates as a tagged union of pydantic models.

A certificate names one obstruction. Reductions wrap an inner certificate
that is checked on the even parts, the annexes or the ungraded algebras
of the pair; they nest at most once.
"""

from dataclasses import dataclass
from typing import Annotated, Any, Dict, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, field_validator

from degenlab.errors import MalformedCertificate

MAX_DEPTH = 2
MAX_POWER = 8
MAX_BURDE_INDEX = 4


class _Certificate(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def describe(self) -> str:
        return self.kind


class PowerDim(_Certificate):
    kind: Literal["PowerDim"] = "PowerDim"
    r: int = Field(ge=1, le=MAX_POWER)
    parity: Literal[0, 1]

    def describe(self) -> str:
        return f"PowerDim{{r:{self.r}, parity:{self.parity}}}"


class BurdeMismatch(_Certificate):
    kind: Literal["BurdeMismatch"] = "BurdeMismatch"
    i: int = Field(ge=1, le=MAX_BURDE_INDEX)
    j: int = Field(ge=1, le=MAX_BURDE_INDEX)

    def describe(self) -> str:
        return f"BurdeMismatch{{{self.i},{self.j}}}"


class AssociativePI(_Certificate):
    kind: Literal["AssociativePI"] = "AssociativePI"


class AutDim(_Certificate):
    kind: Literal["AutDim"] = "AutDim"


class ExternalFact(_Certificate):
    kind: Literal["ExternalFact"] = "ExternalFact"
    citation: str

    @field_validator("citation")
    def citation_must_be_present(cls, v):
        if not v.strip():
            raise ValueError("ExternalFact needs a citation")
        return v

    def describe(self) -> str:
        return f"ExternalFact{{{self.citation}}}"


class _Reduction(_Certificate):
    inner: "NonDegenerationCertificate"

    def describe(self) -> str:
        return f"{self.kind}{{{self.inner.describe()}}}"


class EvenPartReduction(_Reduction):
    kind: Literal["EvenPartReduction"] = "EvenPartReduction"


class AnnexReduction(_Reduction):
    kind: Literal["AnnexReduction"] = "AnnexReduction"


class UngradedReduction(_Reduction):
    kind: Literal["UngradedReduction"] = "UngradedReduction"


NonDegenerationCertificate = Annotated[
    Union[PowerDim, BurdeMismatch, AssociativePI, AutDim, ExternalFact,
          EvenPartReduction, AnnexReduction, UngradedReduction],
    Field(discriminator="kind"),
]

for _model in (EvenPartReduction, AnnexReduction, UngradedReduction):
    _model.model_rebuild()

REDUCTIONS = (EvenPartReduction, AnnexReduction, UngradedReduction)
KINDS = ("PowerDim", "BurdeMismatch", "AssociativePI", "AutDim", "ExternalFact",
         "EvenPartReduction", "AnnexReduction", "UngradedReduction")

_adapter = TypeAdapter(NonDegenerationCertificate)


def certificate_depth(c) -> int:
    return 1 + certificate_depth(c.inner) if isinstance(c, _Reduction) else 1


def ensure_depth(c) -> None:
    depth = certificate_depth(c)
    if depth > MAX_DEPTH:
        raise MalformedCertificate(f"Certificate {c.describe()} nests {depth} levels, at most {MAX_DEPTH} allowed")


def parse_certificate(data: Dict[str, Any]):
    """
    Validate the certificate part of a document.

    Only the keys that belong to the certificate are read (kind, r, parity,
    i, j, citation, inner); pair and provenance keys are ignored.

    Raises:
        MalformedCertificate: On unknown kinds, missing fields or deep nesting
    """
    if not isinstance(data, dict):
        raise MalformedCertificate(f"Certificate must be an object, got {type(data).__name__}")
    try:
        certificate = _adapter.validate_python(_certificate_fields(data))
    except ValidationError as e:
        raise MalformedCertificate(f"Invalid certificate {data.get('kind')!r}: {e}") from e
    ensure_depth(certificate)
    return certificate


def _certificate_fields(data: Dict[str, Any]) -> Dict[str, Any]:
    fields = {k: v for k, v in data.items() if k in ("kind", "r", "parity", "i", "j", "citation")}
    if "inner" in data:
        inner = data["inner"]
        fields["inner"] = _certificate_fields(inner) if isinstance(inner, dict) else inner
    return fields


def certificate_to_dict(c) -> Dict[str, Any]:
    return c.model_dump()


@dataclass(frozen=True)
class CertifiedPair:
    """A claimed non-degeneration source -/-> target with its certificate."""

    source: str
    target: str
    certificate: Any
    provenance: str = "derived"
    variety: Optional[Tuple[int, int]] = None

    def describe(self) -> str:
        return f"{self.source} -/-> {self.target} by {self.certificate.describe()} ({self.provenance})"
