"""
Tests for derivation dimensions, Burde invariants, invariant profiles and
the invariant cache.
"""

from fractions import Fraction

import pytest

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.cli.reproduce import burde_text
from degenlab.errors import IndexOutOfRange
from degenlab.invariants.burde import DENOMINATOR_ZERO, NOT_CONSTANT, NUMERATOR_ZERO, burde_invariant
from degenlab.invariants.cache import MAX_ENTRIES, get_cache_stats, invalidate_cache, set_cache_size
from degenlab.invariants.derivations import derivation_dimension
from degenlab.invariants.profile import invariant_profile, is_associative


def test_derivation_dimensions_match_the_tables(catalog):
    for entry in catalog.entries:
        if entry.expected_aut_dim is None:
            continue
        assert derivation_dimension(entry.algebra) == entry.expected_aut_dim, entry.qualified_name


def test_associativity_types_match_the_tables(catalog):
    for entry in catalog.entries:
        if entry.expected_type is None:
            continue
        computed = "associative" if is_associative(entry.algebra) else "non-associative"
        assert computed == entry.expected_type, entry.qualified_name


def test_burde_values_match_recorded_computations(catalog):
    for entry in catalog.entries:
        for (i, j), expectation in entry.expected_burde.items():
            computed = burde_text(burde_invariant(entry.algebra, i, j))
            assert computed == expectation.computed, f"{entry.qualified_name} c_({i},{j})"


@pytest.mark.parametrize("name,variety,indices,value", [
    ("S_4^3", (1, 2), (1, 1), Fraction(25, 9)),
    ("S_4^3", (1, 2), (1, 2), Fraction(45, 17)),
    ("S_5^3", (1, 2), (2, 2), Fraction(2)),
    ("S_6^3", (1, 2), (1, 1), Fraction(3)),
    ("S_1^2", (1, 2), (1, 1), Fraction(9, 5)),
    ("B_2^s", (2, 1), (1, 1), Fraction(9, 5)),
])
def test_defined_burde_values(algebra, name, variety, indices, value):
    result = burde_invariant(algebra(name, variety), *indices)
    assert result.defined
    assert result.value == value


@pytest.mark.parametrize("name,variety,reason", [
    ("S_2^3", (1, 2), DENOMINATOR_ZERO),
    ("S_1^3", (1, 2), NUMERATOR_ZERO),
    ("2U_1^s", (2, 1), NOT_CONSTANT),
    ("C^{2,1}", (2, 1), DENOMINATOR_ZERO),
])
def test_undefined_burde_values(algebra, name, variety, reason):
    result = burde_invariant(algebra(name, variety), 1, 1)
    assert not result.defined
    assert result.reason == reason
    assert result.to_dict()["reason"] == reason


def test_burde_index_range(algebra):
    with pytest.raises(IndexOutOfRange):
        burde_invariant(algebra("S_7^3", (1, 2)), 5, 1)


def test_derivations_of_the_zero_algebra():
    # every even map is a derivation: m^2 + n^2
    assert derivation_dimension(SuperAlgebra.zero(1, 2)) == 5
    assert derivation_dimension(SuperAlgebra.zero(0, 3)) == 9
    assert derivation_dimension(SuperAlgebra.zero(2, 1)) == 5


def test_invariant_profile(algebra):
    profile = invariant_profile(algebra("S_7^3", (1, 2)))
    assert profile.dims == (1, 2)
    assert profile.derivation_dim == 3
    assert not profile.associative
    assert profile.burde(1, 1).value == Fraction(8, 3)
    assert profile.annex_power_profile.dims == ((1, 2), (1, 0), (0, 0), (0, 0))
    assert profile.even_part_profile.dims == (1, 0)
    assert profile.even_part_profile.even_part_profile is None
    data = profile.to_dict()
    assert data["power_profile"] == [[1, 2], [1, 2], [1, 2], [1, 2]]
    assert data["burde_11"]["value"] == "8/3"


def test_separating_key_tells_apart_same_rank_algebras(algebra):
    # equal derivation dimensions, different Burde values
    a = invariant_profile(algebra("S_7^3", (1, 2)), include_even_part=False)
    b = invariant_profile(algebra("S_8^3", (1, 2)), include_even_part=False)
    assert a.derivation_dim == b.derivation_dim
    assert a.separating_key() != b.separating_key()


def test_cache_hits_on_repeated_queries(algebra):
    invalidate_cache()
    A = algebra("S_5^3", (1, 2))
    derivation_dimension(A)
    derivation_dimension(A.with_name("renamed"))
    stats = get_cache_stats()
    assert stats["entries"] == 1
    assert stats["misses"] == 1
    assert stats["hits"] == 1


def test_cache_is_bounded(catalog):
    invalidate_cache()
    set_cache_size(3)
    try:
        entries = catalog.entries[:5]
        for entry in entries:
            derivation_dimension(entry.algebra)
        stats = get_cache_stats()
        assert stats["entries"] == 3
        assert stats["max_entries"] == 3
        assert stats["evictions"] == 2
        # the most recent algebras are still cached
        derivation_dimension(entries[-1].algebra)
        assert get_cache_stats()["hits"] == 1
        derivation_dimension(entries[0].algebra)
        assert get_cache_stats()["misses"] == 6
    finally:
        set_cache_size(MAX_ENTRIES)
        invalidate_cache()


def test_cache_size_must_be_positive():
    with pytest.raises(ValueError):
        set_cache_size(0)
