# pytest fixtures

import pytest

from graphconj import enumerate_connected_range, named_graph
from graphconj.enumeration import FamilyFilter


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: exhaustive sweeps over enumerated graph families"
    )


@pytest.fixture(scope="session")
def connected_upto_5():
    """Every connected graph with 1 <= n <= 5 (1 + 1 + 2 + 6 + 21 graphs)."""
    return list(enumerate_connected_range(1, 5))


@pytest.fixture(scope="session")
def connected_upto_7():
    """Every connected graph with 1 <= n <= 7."""
    return list(enumerate_connected_range(1, 7))


@pytest.fixture(scope="session")
def connected_upto_8():
    return list(enumerate_connected_range(1, 8))


@pytest.fixture(scope="session")
def cubic_upto_12():
    return list(enumerate_connected_range(4, 12, FamilyFilter("cubic")))


@pytest.fixture
def k4():
    return named_graph("K4")


@pytest.fixture
def c5():
    return named_graph("C5")


@pytest.fixture
def p4():
    return named_graph("P4")


@pytest.fixture
def graph6_file(tmp_path):
    """A graph6 file with K4, C5 and P4 (one per line) and a comment."""
    path = tmp_path / "graphs.g6"
    path.write_text("# three small graphs\nC~\nDhc\nCh\n", encoding="utf-8")
    return path
