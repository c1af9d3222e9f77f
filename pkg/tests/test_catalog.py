"""
Tests for catalog lookup, fixtures and export.
"""

import pytest

from degenlab.catalog import (
    CATALOG_ENV,
    Catalog,
    clear_catalog_cache,
    default_catalog,
    parse_variety,
    qualified_name,
    split_name,
)
from degenlab.errors import AmbiguousName, FixtureError, UnknownName


def test_lookup_by_qualified_name(catalog):
    entry = catalog.get("S_7^3")
    assert entry.variety == (1, 2)
    assert entry.algebra.describe() == "e1e1=e1, e1f1=1/2 f1, e1f2=1/2 f2, f1f2=e1"
    assert entry.expected_aut_dim == 3
    assert catalog.get("S_1^2@2,1").variety == (2, 1)
    assert catalog.get("S_1^2", (1, 2)).qualified_name == "S_1^2@1,2"


def test_lookup_errors(catalog):
    with pytest.raises(AmbiguousName):
        catalog.get("S_1^2")
    with pytest.raises(UnknownName):
        catalog.get("nope")
    with pytest.raises(UnknownName):
        catalog.get("S_7^3", (2, 1))
    with pytest.raises(UnknownName):
        catalog.get("S_7^3@1,2", (2, 1))


def test_lookup_errors_are_key_errors(catalog):
    with pytest.raises(KeyError):
        catalog.get("nope")


def test_lists_in_table_order(catalog):
    assert catalog.varieties == [(1, 2), (2, 1), (0, 3)]
    assert len(catalog.list((1, 2))) == 12
    assert len(catalog.list((2, 1))) == 15
    assert [e.name for e in catalog.list((0, 3))] == ["C^{0,3}"]
    assert catalog.list((1, 2))[0].name == "U_1^s"
    assert catalog.list((2, 1))[-1].name == "C^{2,1}"


def test_fixture_counts(catalog):
    assert len(catalog.fixtures("witnesses", (1, 2))) == 10
    assert len(catalog.fixtures("witnesses", (2, 1))) == 18
    assert len(catalog.fixtures("certificates", (1, 2))) == 28
    assert len(catalog.fixtures("certificates", (2, 1))) == 32
    assert [w.flag for w in catalog.fixtures("witnesses")].count("erratum") == 3
    with pytest.raises(ValueError):
        catalog.fixtures("pictures")


def test_resolve_variety(catalog):
    assert catalog.resolve_variety("S_7^3", "S_5^3") == (1, 2)
    assert catalog.resolve_variety("S_13^3", "B_3^s") == (2, 1)
    assert catalog.resolve_variety("S_1^2@2,1", "U_1^s") == (2, 1)
    with pytest.raises(AmbiguousName):
        catalog.resolve_variety("S_1^2", "U_1^s")
    with pytest.raises(UnknownName):
        catalog.resolve_variety("S_7^3", "B_3^s")


def test_published(catalog):
    published = catalog.published((1, 2))
    assert len(published.primary_edges) == 14
    assert published.component_errata == ["S_1^3", "S_2^2", "S_7^3"]
    assert len(catalog.published((2, 1)).primary_edges) == 20
    assert catalog.published((0, 3)) is None


def test_names():
    assert parse_variety("2,1") == (2, 1)
    assert split_name("S_1^2@2,1") == ("S_1^2", (2, 1))
    assert split_name("C^{1,2}") == ("C^{1,2}", None)
    assert qualified_name("C^{1,2}", (1, 2)) == "C^{1,2}@1,2"
    assert split_name(qualified_name("C^{1,2}", (1, 2))) == ("C^{1,2}", (1, 2))


@pytest.mark.parametrize("text", ["2", "a,b", "1,2,3", "-1,2"])
def test_parse_variety_rejects(text):
    with pytest.raises(ValueError):
        parse_variety(text)


def test_export_round_trip(catalog, tmp_path):
    written = catalog.export(tmp_path)
    assert sorted(p.name for p in written) == ["algebras.json", "certificates.json", "published.json",
                                               "witnesses.json"]
    reloaded = Catalog.from_directory(tmp_path)
    assert [e.qualified_name for e in reloaded.entries] == [e.qualified_name for e in catalog.entries]
    assert [e.algebra for e in reloaded.entries] == [e.algebra for e in catalog.entries]
    assert ([(w.source, w.target, w.flag, w.rows()) for w in reloaded.fixtures("witnesses")]
            == [(w.source, w.target, w.flag, w.rows()) for w in catalog.fixtures("witnesses")])
    assert ([(c.source, c.target, c.certificate) for c in reloaded.fixtures("certificates")]
            == [(c.source, c.target, c.certificate) for c in catalog.fixtures("certificates")])
    assert reloaded.published((1, 2)) == catalog.published((1, 2))
    assert reloaded.documents() == catalog.documents()


def test_missing_documents(tmp_path):
    with pytest.raises(FileNotFoundError):
        Catalog.from_directory(tmp_path)


def test_invalid_entry_is_a_fixture_error(tmp_path):
    (tmp_path / "algebras.yaml").write_text(
        "algebras:\n  - {name: bad, variety: [1, 2], products: {e1.f1: [[e1, 1]]}}\n")
    (tmp_path / "witnesses.yaml").write_text("witnesses: []\n")
    (tmp_path / "certificates.yaml").write_text("certificates: []\n")
    with pytest.raises(FixtureError):
        Catalog.from_directory(tmp_path)


def test_default_catalog_is_cached_and_follows_the_environment(catalog, tmp_path, monkeypatch):
    catalog.export(tmp_path)
    monkeypatch.setenv(CATALOG_ENV, str(tmp_path))
    clear_catalog_cache()
    try:
        first = default_catalog()
        assert first is default_catalog()
        assert first.location == str(tmp_path)
    finally:
        clear_catalog_cache()
