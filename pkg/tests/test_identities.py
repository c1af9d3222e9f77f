"""
Tests for the Jordan superalgebra identity, associativity and the
mutation generator.
"""

from fractions import Fraction

import pytest

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.errors import IndexOutOfRange
from degenlab.identities.grassmann import GrassmannElement, grassmann_product, tagged_embed
from degenlab.identities.jordan import check_associative, check_jordan_super, residual_at
from degenlab.identities.mutations import PEIRCE, SUPERCOMMUTATIVITY, mutation_candidates, mutations


def peirce_algebra(eigenvalue):
    """e1e1 = e1 and e1f1 = eigenvalue * f1, type (1,1)."""
    return SuperAlgebra.from_products(1, 1, {"e1.e1": [["e1", 1]], "e1.f1": [["f1", eigenvalue]]})


def test_every_catalog_algebra_is_jordan(catalog):
    for entry in catalog.entries:
        report = check_jordan_super(entry.algebra)
        assert report.passed, f"{entry.qualified_name}: {report.to_dict()}"


@pytest.mark.parametrize("eigenvalue,jordan", [
    (0, True),
    ("1/2", True),
    (1, True),
    ("1/3", False),
    ("1/4", False),
    (2, False),
    (-1, False),
])
def test_peirce_eigenvalues(eigenvalue, jordan):
    assert check_jordan_super(peirce_algebra(eigenvalue)).passed is jordan


def test_failure_carries_a_witness():
    A = SuperAlgebra.from_products(1, 2, {"e1.e1": [["e1", 1]], "e1.f1": [["f1", "1/3"]]}, name="bad")
    report = check_jordan_super(A)
    assert not report.passed
    assert report.verdict == "fail"
    assert report.witness.kind == "jordan"
    assert len(report.witness.basis) == 4
    recomputed = residual_at(A, report.witness)
    assert recomputed == dict(report.witness.residual)
    assert recomputed


def test_supercommutativity_is_checked_first():
    A = SuperAlgebra.from_products(1, 1, {"e1.f1": [["f1", "1/2"]]}, complete=False)
    report = check_jordan_super(A)
    assert not report.passed
    assert report.witness.kind == "supercommutativity"
    assert report.witness.basis == ("e1", "f1")


def test_grassmann_signs():
    x1, x2 = GrassmannElement.generator(1), GrassmannElement.generator(2)
    assert x1 * x2 == -(x2 * x1)
    assert (x1 * x1).is_zero()
    assert GrassmannElement.monomial(2, 1) == -GrassmannElement.monomial(1, 2)
    assert grassmann_product(GrassmannElement.generator(3), GrassmannElement.monomial(1, 2)) == \
        GrassmannElement.monomial(1, 2, 3)


def test_envelope_of_a_supercommutative_algebra_commutes(algebra):
    A = algebra("S_7^3", (1, 2))
    u = tagged_embed(A, "f1", 1)
    v = tagged_embed(A, "f2", 2)
    assert u * v == v * u
    assert (u * v).terms == {((1, 3), 0): 1}
    assert tagged_embed(A, "e1", 3).terms == {((5, 6), 0): 1}
    with pytest.raises(IndexOutOfRange):
        tagged_embed(A, "e1", 5)


def test_associativity(algebra):
    report = check_associative(algebra("S_1^2", (1, 2)))
    assert not report
    assert report.witness == ("e1", "e1", "f1")
    assert report.left == (0, Fraction(1, 2), 0)
    assert report.right == (0, Fraction(1, 4), 0)
    assert check_associative(algebra("S_2^2", (1, 2)))
    assert check_associative(algebra("C^{0,3}", (0, 3)))


def test_mutation_candidates_in_order():
    candidates = mutation_candidates(peirce_algebra("1/2"))
    assert candidates == [
        (SUPERCOMMUTATIVITY, (0, 1, 1), Fraction(3, 2)),
        (SUPERCOMMUTATIVITY, (1, 1, 0), Fraction(1)),
        (PEIRCE, (0, 1, 1), Fraction(1, 3)),
        (PEIRCE, (0, 1, 1), Fraction(1, 4)),
        (PEIRCE, (0, 1, 1), Fraction(2, 3)),
    ]


def test_mutations_are_seeded(algebra):
    A = algebra("S_7^3", (1, 2))
    first = [(m.kind, m.entry, m.value) for m in mutations(A, 5, seed=7)]
    second = [(m.kind, m.entry, m.value) for m in mutations(A, 5, seed=7)]
    assert first == second
    assert len(set(first)) == 5


def test_odd_only_algebra_has_no_mutations(algebra):
    assert mutations(algebra("C^{0,3}", (0, 3)), 5, seed=1) == []


def test_every_mutation_is_rejected(catalog, settings):
    for entry in catalog.entries:
        A = entry.algebra
        drawn = mutations(A, settings.reproduce.mutations_per_algebra, settings.reproduce.seed)
        assert len(drawn) == min(settings.reproduce.mutations_per_algebra, len(mutation_candidates(A)))
        for mutation in drawn:
            assert not check_jordan_super(mutation.algebra).passed, f"{entry.qualified_name}: {mutation.describe()}"
