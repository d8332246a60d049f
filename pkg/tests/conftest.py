from pathlib import Path

import numpy as np
import pytest

from fspace.loader import FspaceLoader
from fspace.models.poset import Poset

FIXTURES_DIR = Path(__file__).parent.parent / "data" / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def loader():
    return FspaceLoader()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def s1():
    """a, b < c, d: the minimal finite model of the circle."""
    return Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)], ["a", "b", "c", "d"])


@pytest.fixture
def vposet():
    return Poset.from_relations(3, [(0, 2), (1, 2)])


@pytest.fixture
def chain_plus_point():
    """x1 < x2 and an isolated x3."""
    return Poset.from_relations(3, [(0, 1)])


@pytest.fixture(autouse=True)
def _clear_size_env(monkeypatch):
    for name in ("FSPACE_SIZE_LIMIT", "FSPACE_GAMMA_LIMIT", "FSPACE_ENUMERATION_LIMIT"):
        monkeypatch.delenv(name, raising=False)
