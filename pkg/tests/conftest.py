"""
Shared pytest fixtures
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest  # noqa: E402
from hypothesis import HealthCheck, settings  # noqa: E402

from algebra.carriers import parse_carrier  # noqa: E402
from catalogue.catalogue_manager import CatalogueManager  # noqa: E402
from config.settings import ENV_THREADS, OPSPEC_DIR, PRESETS_FILE, RUNTIME  # noqa: E402

# clean_runtime (autouse) direset per test, bukan per contoh hypothesis
settings.register_profile('nondet-agg', deadline=None,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile('nondet-agg')


@pytest.fixture(scope='session')
def catalogue():
    return CatalogueManager(OPSPEC_DIR, PRESETS_FILE)


@pytest.fixture(scope='session')
def load_ops(catalogue):
    """Load catalogue entry by name: load_ops('mod5_add')"""
    return catalogue.load_opspec


@pytest.fixture
def mod2():
    return parse_carrier('mod 2')


@pytest.fixture
def mod3():
    return parse_carrier('mod 3')


@pytest.fixture(autouse=True)
def clean_runtime(monkeypatch):
    """Setiap test mulai tanpa progress bar dan tanpa NONDET_AGG_THREADS"""
    monkeypatch.delenv(ENV_THREADS, raising=False)
    RUNTIME['progress'] = False
    yield
    RUNTIME['progress'] = False
