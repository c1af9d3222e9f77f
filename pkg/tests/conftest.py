import pytest
from hypothesis import settings as hypothesis_settings

from degenlab.catalog import default_catalog
from degenlab.config import Settings

hypothesis_settings.register_profile("exact", deadline=None)
hypothesis_settings.load_profile("exact")


@pytest.fixture(scope="session")
def catalog():
    """The bundled catalog, loaded once per session."""
    return default_catalog()


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def algebra(catalog):
    """Look up a catalog algebra by name and variety: algebra("S_7^3", (1, 2))."""
    def lookup(name, variety=None):
        return catalog.algebra(name, variety)
    return lookup
