import pytest

from sepgroid.data import load_fixture
from sepgroid.graph.parser import parse_graph
from sepgroid.toolkit import Toolkit


def _toolkit(name: str) -> Toolkit:
    return Toolkit(parse_graph(load_fixture(name)))


@pytest.fixture
def g0() -> Toolkit:
    return _toolkit("g0")


@pytest.fixture
def g1() -> Toolkit:
    return _toolkit("g1")


@pytest.fixture
def g2() -> Toolkit:
    return _toolkit("g2")


@pytest.fixture
def g3() -> Toolkit:
    return _toolkit("g3")


@pytest.fixture(params=["g0", "g1", "g2", "g3"])
def fixture_toolkit(request) -> Toolkit:
    return _toolkit(request.param)
