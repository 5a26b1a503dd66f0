import pytest

from app.chromatic import PolynomialMemo
from app.cli.instances import load_instance
from app.config import disable_faults
from app.hypergraph import Hypergraph, hypertree, linear_cycle


@pytest.fixture(autouse=True)
def no_faults(monkeypatch):
    monkeypatch.delenv("HYPERCHROMA_CACHE", raising=False)
    disable_faults()
    yield
    disable_faults()


@pytest.fixture
def memo():
    return PolynomialMemo()


@pytest.fixture
def c4() -> Hypergraph:
    return linear_cycle(2, 4)


@pytest.fixture
def k3() -> Hypergraph:
    return linear_cycle(2, 3)


@pytest.fixture
def cycle34() -> Hypergraph:
    """3-uniform linear 4-cycle on 8 vertices."""
    return linear_cycle(3, 4)


@pytest.fixture
def single_edge() -> Hypergraph:
    return hypertree(3, 1, 0)


@pytest.fixture
def mixed() -> Hypergraph:
    return load_instance("file:data/mixed.hg")


@pytest.fixture
def table1() -> Hypergraph:
    return load_instance("file:data/table1.hg")
