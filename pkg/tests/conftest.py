import pytest

from heylab import validate
from heylab.corpus import all_posets_up_to_iso, random_posets


@pytest.fixture
def chain2():
    """b < t."""
    return validate(["b", "t"], [(0, 1)])


@pytest.fixture
def fork():
    """b below incomparable x, y."""
    return validate(["b", "x", "y"], [(0, 1), (0, 2)])


@pytest.fixture
def antichain3():
    return validate(["a", "b", "c"], [])


@pytest.fixture
def point():
    return validate(["p"], [])


@pytest.fixture(scope="session")
def small_corpus():
    """All posets on <= 4 points plus a few random ones; fast test corpus."""
    return all_posets_up_to_iso(4) + random_posets(20, seed=99, max_points=6)
