import pytest

from srreg.algebra.complexes import cycle_complex
from srreg.algebra.graphs import Graph, edge_ideal
from srreg.algebra.homology import set_fault_injection
from srreg.harness.corpus import bull_graph, intro_complex, remark_ideal


@pytest.fixture(autouse=True)
def _no_fault_injection():
    set_fault_injection(False)
    yield
    set_fault_injection(False)


@pytest.fixture
def intro():
    return intro_complex()


@pytest.fixture
def remark():
    return remark_ideal()


@pytest.fixture
def bull():
    return bull_graph()


@pytest.fixture
def triangle_edges():
    """I(K3) = (x1x2, x1x3, x2x3)."""
    return edge_ideal(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]))


@pytest.fixture
def square():
    return cycle_complex(4)
