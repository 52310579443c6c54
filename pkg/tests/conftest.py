import pytest
from hypothesis import HealthCheck, settings

from macsym import cache as table_cache

settings.register_profile(
    "macsym", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("macsym")


@pytest.fixture
def isolated_cache(tmp_path, monkeypatch):
    """A fresh on-disk cache; the process-wide cache is restored afterwards."""
    monkeypatch.delenv(table_cache.ENV_VAR, raising=False)
    saved = table_cache._active
    store = table_cache.configure(tmp_path / "tables.json")
    yield store
    table_cache._active = saved
