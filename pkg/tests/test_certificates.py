"""
Tests for non-degeneration certificates: parsing, checking and the
automatic toolkit search.
"""

import pytest

from degenlab.certificates.auto import auto_certify, toolkit
from degenlab.certificates.check import ASSERTED_ONLY, INVALID, VALID, check_certificate
from degenlab.certificates.model import (
    AnnexReduction,
    AssociativePI,
    AutDim,
    BurdeMismatch,
    EvenPartReduction,
    ExternalFact,
    PowerDim,
    UngradedReduction,
    certificate_depth,
    parse_certificate,
)
from degenlab.errors import MalformedCertificate, ReductionUndefined


def test_shipped_certificates_check(catalog):
    pairs = catalog.fixtures("certificates")
    assert len(pairs) == 60
    external = 0
    for pair in pairs:
        A = catalog.algebra(pair.source, pair.variety)
        B = catalog.algebra(pair.target, pair.variety)
        verdict = check_certificate(A, B, pair.certificate)
        if isinstance(pair.certificate, ExternalFact):
            external += 1
            assert verdict.status == ASSERTED_ONLY
            assert verdict.passed(allow_external=True)
            assert not verdict.passed(allow_external=False)
        else:
            assert verdict.status == VALID, f"{pair.describe()}: {verdict.reason}"
    assert external == 8


def test_power_dim_evidence(algebra):
    verdict = check_certificate(algebra("S_3^3", (1, 2)), algebra("S_2^3", (1, 2)), PowerDim(r=2, parity=0))
    assert verdict.valid
    assert verdict.evidence == {"r": 2, "parity": 0, "source_dim": 0, "target_dim": 1}


@pytest.mark.parametrize("source,target,certificate", [
    # a genuine degeneration admits no certificate
    ("S_2^2", "S_3^3", PowerDim(r=2, parity=0)),
    ("S_2^3", "S_3^3", BurdeMismatch(i=1, j=1)),
    ("S_7^3", "S_5^3", AssociativePI()),
    ("S_3^3", "S_2^3", AutDim()),
])
def test_invalid_certificates(algebra, source, target, certificate):
    verdict = check_certificate(algebra(source, (1, 2)), algebra(target, (1, 2)), certificate)
    assert verdict.status == INVALID
    assert verdict.reason
    assert not verdict.passed()


def test_associative_source_required(algebra):
    verdict = check_certificate(algebra("S_7^3", (1, 2)), algebra("S_5^3", (1, 2)), AssociativePI())
    assert verdict.reason == "source is not associative"


def test_aut_dim_with_equal_ranks(algebra):
    verdict = check_certificate(algebra("S_7^3", (1, 2)), algebra("S_8^3", (1, 2)), AutDim())
    assert verdict.valid
    assert verdict.evidence["distinct"] is True
    same = check_certificate(algebra("S_7^3", (1, 2)), algebra("S_7^3", (1, 2)), AutDim())
    assert same.status == INVALID


def test_even_part_reduction(algebra):
    c = EvenPartReduction(inner=PowerDim(r=2, parity=0))
    verdict = check_certificate(algebra("S_3^3", (1, 2)), algebra("U_1^s", (1, 2)), c)
    assert verdict.valid
    assert verdict.evidence["reduction"] == "EvenPartReduction"
    assert verdict.evidence["inner"]["status"] == VALID


def test_ungraded_reduction_needs_zero_odd_products(algebra):
    c = UngradedReduction(inner=AutDim())
    with pytest.raises(ReductionUndefined):
        check_certificate(algebra("S_2^3", (1, 2)), algebra("S_3^3", (1, 2)), c)


def test_nesting_limit(algebra):
    c = EvenPartReduction(inner=AnnexReduction(inner=AutDim()))
    assert certificate_depth(c) == 3
    with pytest.raises(MalformedCertificate):
        check_certificate(algebra("S_7^3", (1, 2)), algebra("S_5^3", (1, 2)), c)


def test_describe():
    c = EvenPartReduction(inner=PowerDim(r=2, parity=0))
    assert c.describe() == "EvenPartReduction{PowerDim{r:2, parity:0}}"
    assert certificate_depth(c) == 2
    assert BurdeMismatch(i=1, j=2).describe() == "BurdeMismatch{1,2}"
    assert AutDim().describe() == "AutDim"


# Parsing

def test_parse_ignores_pair_keys():
    c = parse_certificate({"source": "S_3^3", "target": "S_2^3", "provenance": "x",
                           "kind": "PowerDim", "r": 2, "parity": 0})
    assert c == PowerDim(r=2, parity=0)


def test_parse_nested():
    c = parse_certificate({"kind": "AnnexReduction", "inner": {"kind": "PowerDim", "r": 2, "parity": 0}})
    assert c == AnnexReduction(inner=PowerDim(r=2, parity=0))


@pytest.mark.parametrize("data", [
    {"kind": "Magic"},
    {"kind": "PowerDim", "r": 0, "parity": 0},
    {"kind": "PowerDim", "r": 2, "parity": 2},
    {"kind": "BurdeMismatch", "i": 5, "j": 1},
    {"kind": "ExternalFact", "citation": "  "},
    {"kind": "EvenPartReduction"},
    {"kind": "EvenPartReduction", "inner": {"kind": "AnnexReduction", "inner": {"kind": "AutDim"}}},
    "PowerDim",
])
def test_parse_rejects(data):
    with pytest.raises(MalformedCertificate):
        parse_certificate(data)


# Toolkit search

def test_toolkit_order():
    base = toolkit(r_max=2, burde_indices=[(1, 1)])
    assert [c.describe() for c in base] == [
        "PowerDim{r:1, parity:0}", "PowerDim{r:1, parity:1}",
        "PowerDim{r:2, parity:0}", "PowerDim{r:2, parity:1}",
        "AutDim", "AssociativePI", "BurdeMismatch{1,1}",
    ]


def test_auto_certify_prefers_power_dimensions(algebra):
    c = auto_certify(algebra("S_1^2", (2, 1)), algebra("B_2^s", (2, 1)))
    assert c == PowerDim(r=2, parity=0)


def test_auto_certify_associativity(algebra):
    c = auto_certify(algebra("S_2^2+U_1^s", (2, 1)), algebra("S_1^2", (2, 1)))
    assert c == AssociativePI()


def test_auto_certify_gives_up(algebra):
    assert auto_certify(algebra("S_2^2+U_1^s", (2, 1)), algebra("B_1^s", (2, 1))) is None
