import os

import numpy as np
import pytest

from app_helpers import get_settings_path
from quandle_toolkit.enumeration import enumerate_quandles
from quandle_toolkit.links import read_link
from quandle_toolkit.settings_manager import load_settings
from quandle_toolkit.table_io import read_table

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=None,
        help="seed for the randomized property tests (default: settings random_seed)",
    )


@pytest.fixture(scope="session")
def seed(request) -> int:
    value = request.config.getoption("--seed")
    if value is not None:
        return value
    return load_settings(get_settings_path()).random_seed


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@pytest.fixture
def fixture_path():
    def _path(name: str) -> str:
        return os.path.join(FIXTURES, name)

    return _path


@pytest.fixture
def load_table(fixture_path):
    return lambda name: read_table(fixture_path(name))


@pytest.fixture
def load_link(fixture_path):
    return lambda name: read_link(fixture_path(name))


@pytest.fixture(scope="session")
def catalogs():
    return {order: enumerate_quandles(order) for order in range(1, 6)}
