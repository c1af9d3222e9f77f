"""
Tests for the superalgebra value types and the basic constructions.
"""

from fractions import Fraction

import pytest

from degenlab.algebra.constructions import (
    annex,
    change_basis,
    direct_sum,
    even_part,
    forget_grading,
    is_supercommutative,
    power_profile,
    product,
    supercommutativity_violation,
)
from degenlab.algebra.superalgebra import GradedBasisChange, SuperAlgebra, label_index
from degenlab.arith.linalg import fraction_matrix
from degenlab.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    MalformedAlgebra,
    NonzeroOddOddProducts,
    SingularMatrix,
)

S73_PRODUCTS = {
    "e1.e1": [["e1", 1]],
    "e1.f1": [["f1", "1/2"]],
    "e1.f2": [["f2", "1/2"]],
    "f1.f2": [["e1", 1]],
}


@pytest.fixture
def s73():
    return SuperAlgebra.from_products(1, 2, S73_PRODUCTS, name="S_7^3")


def test_supercommutative_completion(s73):
    table = s73.table
    assert table[1, 2, 0] == 1
    assert table[2, 1, 0] == -1
    assert table[1, 0, 1] == Fraction(1, 2)
    assert table[0, 1, 1] == Fraction(1, 2)
    assert s73.supercommutative
    assert s73.dims == (1, 2)
    assert s73.labels == ["e1", "f1", "f2"]


def test_table_is_read_only(s73):
    with pytest.raises(ValueError):
        s73.table[0, 0, 0] = Fraction(2)


def test_product_of_vectors(s73):
    assert product(s73, [0, 1, 0], [0, 0, 1]) == (1, 0, 0)
    assert product(s73, [1, 0, 0], [0, 2, 0]) == (0, 1, 0)
    # (e1 + f1)(e1 + f2) = e1 + 1/2 f2 + 1/2 f1 + e1
    assert product(s73, [1, 1, 0], [1, 0, 1]) == (2, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(DimensionMismatch):
        product(s73, [1, 0], [1, 0, 0])


def test_labels():
    assert label_index("e2", 2, 1) == 1
    assert label_index("f1", 2, 1) == 2
    with pytest.raises(IndexOutOfRange):
        label_index("f2", 2, 1)
    with pytest.raises(IndexOutOfRange):
        label_index("x1", 2, 1)


@pytest.mark.parametrize("products", [
    {"e1.f1": [["e1", 1]]},
    {"x1.e1": [["e1", 1]]},
    {"e1.f1": [["f1", 1]], "f1.e1": [["f1", 2]]},
    {"f1.f2": [["e1", 1]], "f2.f1": [["e1", 1]]},
    {"e1.e1": [["e3", 1]]},
])
def test_malformed_products(products):
    with pytest.raises(MalformedAlgebra):
        SuperAlgebra.from_products(1, 2, products)


def test_wrong_table_shape():
    with pytest.raises(DimensionMismatch):
        SuperAlgebra(1, 2, fraction_matrix([[1, 0], [0, 1]]))


def test_supercommutativity_violation():
    A = SuperAlgebra.from_products(1, 1, {"e1.f1": [["f1", 1]]}, complete=False)
    assert not is_supercommutative(A)
    assert supercommutativity_violation(A) == (0, 1, 1)


def test_products_round_trip(s73):
    assert SuperAlgebra.from_products(1, 2, s73.products()) == s73
    assert s73.describe() == "e1e1=e1, e1f1=1/2 f1, e1f2=1/2 f2, f1f2=e1"
    assert SuperAlgebra.zero(1, 2).describe() == "zero multiplication"


def test_equality_ignores_names(s73):
    assert s73 == s73.with_name("other")
    assert hash(s73) == hash(s73.with_name(None))


# Basis changes

def test_scaling_the_idempotent():
    U = SuperAlgebra.from_products(1, 2, {"e1.e1": [["e1", 1]]})
    g = GradedBasisChange([[2]], [[1, 0], [0, 1]])
    assert change_basis(U, g).table[0, 0, 0] == Fraction(1, 2)


def test_identity_change_is_trivial(s73):
    assert change_basis(s73, GradedBasisChange.identity(1, 2)) == s73


def test_compose_multiplies_blocks():
    g = GradedBasisChange([[3]], [[1, 1], [0, 2]])
    h = GradedBasisChange([["1/2"]], [[0, 1], [-1, 1]])
    assert g.compose(h) == GradedBasisChange([["3/2"]], [[-1, 2], [-2, 2]])
    assert g.compose(g.inverse()) == GradedBasisChange.identity(1, 2)


def test_change_basis_errors(s73):
    with pytest.raises(DimensionMismatch):
        change_basis(s73, GradedBasisChange.identity(2, 1))
    with pytest.raises(SingularMatrix):
        change_basis(s73, GradedBasisChange([[0]], [[1, 0], [0, 1]]))
    with pytest.raises(SingularMatrix):
        GradedBasisChange([[1]], [[1, 1], [1, 1]]).inverse()


def test_from_matrix_requires_grading():
    with pytest.raises(DimensionMismatch):
        GradedBasisChange.from_matrix(fraction_matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), 1)
    g = GradedBasisChange.from_matrix(fraction_matrix([[2, 0, 0], [0, 1, 1], [0, 0, 1]]), 1)
    assert g.determinants() == (2, 1)


# Derived algebras

def test_power_profiles(s73, algebra):
    assert power_profile(s73).dims == ((1, 2),) * 4
    assert power_profile(algebra("S_2^3", (1, 2))).dims == ((1, 2), (1, 0), (0, 0), (0, 0))
    assert power_profile(algebra("C^{1,2}", (1, 2))).dims == ((1, 2), (0, 0), (0, 0), (0, 0))
    assert power_profile(algebra("U_1^s", (1, 2)), r_max=2).dims == ((1, 2), (1, 0))
    with pytest.raises(ValueError):
        power_profile(s73, r_max=0)


def test_even_part(s73):
    J0 = even_part(s73)
    assert J0.dims == (1, 0)
    assert J0 == SuperAlgebra.from_products(1, 0, {"e1.e1": [["e1", 1]]})
    assert J0.name == "S_7^3_0"


def test_annex_keeps_odd_products(s73, algebra):
    a = annex(s73)
    assert a == algebra("S_2^3", (1, 2))
    assert a.name == "a(S_7^3)"


def test_forget_grading(s73, algebra):
    with pytest.raises(NonzeroOddOddProducts):
        forget_grading(algebra("S_2^3", (1, 2)))
    with pytest.raises(NonzeroOddOddProducts):
        forget_grading(s73)
    ungraded = forget_grading(algebra("S_1^2", (1, 2)))
    assert ungraded.dims == (3, 0)
    assert ungraded.table[0, 1, 1] == Fraction(1, 2)


def test_direct_sum(algebra):
    S12 = SuperAlgebra.from_products(1, 1, {"e1.e1": [["e1", 1]], "e1.f1": [["f1", "1/2"]]}, name="S_1^2")
    U = SuperAlgebra.from_products(1, 0, {"e1.e1": [["e1", 1]]}, name="U_1^s")
    total = direct_sum(S12, U)
    assert total.dims == (2, 1)
    assert total.name == "S_1^2+U_1^s"
    assert total == algebra("S_1^2+U_1^s", (2, 1))
