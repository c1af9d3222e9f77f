"""
Invariants must not change under a graded change of basis, and basis
changes must act as a group.
"""

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from degenlab.algebra.constructions import change_basis, power_profile
from degenlab.algebra.superalgebra import GradedBasisChange
from degenlab.arith.linalg import determinant, fraction_matrix
from degenlab.catalog import default_catalog
from degenlab.identities.jordan import check_jordan_super
from degenlab.invariants.burde import burde_invariant
from degenlab.invariants.derivations import derivation_dimension
from degenlab.invariants.profile import is_associative

ENTRIES = default_catalog().entries


def invertible(size):
    entries = st.integers(min_value=-2, max_value=2)
    return (st.lists(st.lists(entries, min_size=size, max_size=size), min_size=size, max_size=size)
            .filter(lambda rows: determinant(fraction_matrix(rows)) != 0))


def graded_changes(m, n):
    return st.builds(GradedBasisChange, invertible(m), invertible(n))


@pytest.mark.slow
@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.qualified_name)
def test_conjugates_keep_their_invariants(entry):
    A = entry.algebra
    jordan = check_jordan_super(A).passed
    dims = power_profile(A).dims
    derivations = derivation_dimension(A)
    associative = is_associative(A)
    burde = burde_invariant(A, 1, 1).to_dict()

    @settings(max_examples=50, suppress_health_check=[HealthCheck.filter_too_much])
    @given(graded_changes(*entry.variety))
    def check(g):
        B = change_basis(A, g)
        assert check_jordan_super(B).passed == jordan
        assert power_profile(B).dims == dims
        assert derivation_dimension(B) == derivations
        assert is_associative(B) == associative
        assert burde_invariant(B, 1, 1).to_dict() == burde

    check()


@st.composite
def algebra_with_two_changes(draw):
    entry = draw(st.sampled_from(ENTRIES))
    changes = graded_changes(*entry.variety)
    return entry.algebra, draw(changes), draw(changes)


@settings(max_examples=100, suppress_health_check=[HealthCheck.filter_too_much])
@given(algebra_with_two_changes())
def test_change_basis_is_a_group_action(drawn):
    A, g, h = drawn
    assert change_basis(change_basis(A, h), g) == change_basis(A, g.compose(h))
    assert change_basis(change_basis(A, g), g.inverse()) == A
