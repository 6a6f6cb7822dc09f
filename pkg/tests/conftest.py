"""Test configuration for pytest."""

from functools import lru_cache

import pytest
import structlog

from regfact.config import set_settings
from regfact.constructions import Construction, build_construction
from regfact.groups import GroupFamily

GRID = (
    [("dicyclic", s) for s in (2, 3, 4, 5, 6, 7, 8, 10, 12)]
    + [("abelian", n) for n in (4, 8, 12, 16, 20, 24, 32)]
    + [("semidihedral", n) for n in (8, 16, 32)]
    + [("modular", n) for n in (8, 16, 32)]
)


@lru_cache(maxsize=None)
def built(family: str, param: int) -> Construction:
    """Constructions are deterministic, so tests share one build per instance."""
    return build_construction(family, param)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from environment defaults and unconfigured logging."""
    set_settings(None)
    yield
    set_settings(None)
    structlog.contextvars.clear_contextvars()
    structlog.reset_defaults()


@pytest.fixture
def q8() -> GroupFamily:
    return GroupFamily.dicyclic(2)


@pytest.fixture
def z2z4() -> GroupFamily:
    return GroupFamily.abelian(4)


@pytest.fixture
def q8_construction() -> Construction:
    return built("dicyclic", 2)


@pytest.fixture(params=GRID, ids=[f"{family}-{param}" for family, param in GRID])
def grid_construction(request) -> Construction:
    """Every family at the sizes the end-to-end tests cover."""
    return built(*request.param)


@pytest.fixture(scope="session")
def build():
    """Cached ``build(family, param)``."""
    return built
