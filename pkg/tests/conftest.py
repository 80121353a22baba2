"""Shared graphs for the p3count test suite."""

import pytest

from p3count.generators import complete, cycle, paw, path, star, threshold_from_sequence


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def paw_graph():
    return paw()


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k14():
    return star(5)


@pytest.fixture
def paw_threshold():
    """The paw built from its creation sequence (hub is vertex 3)."""
    return threshold_from_sequence("IUIU")
