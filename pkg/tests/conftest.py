import pytest

from app.models.graph import Graph, complete_graph, cycle_graph, graph_from_edges
from app.repositories.graph_repository import GraphRepository
from app.services.chain_service import ChainService
from app.services.cubical_service import CubicalService
from app.services.cycle_service import CycleService
from app.services.graph_service import GraphService
from app.services.homology_service import HomologyService
from app.services.net_service import NetService
from app.services.reduced_service import ReducedModelService


@pytest.fixture(scope="session")
def repository() -> GraphRepository:
    return GraphRepository()


@pytest.fixture(scope="session")
def graphs() -> GraphService:
    return GraphService()


@pytest.fixture(scope="session")
def cubical() -> CubicalService:
    return CubicalService()


@pytest.fixture(scope="session")
def chains(cubical) -> ChainService:
    return ChainService(cubical)


@pytest.fixture(scope="session")
def homology(chains) -> HomologyService:
    return HomologyService(chains)


@pytest.fixture(scope="session")
def cycles(chains) -> CycleService:
    return CycleService(chains)


@pytest.fixture(scope="session")
def reduced() -> ReducedModelService:
    return ReducedModelService()


@pytest.fixture(scope="session")
def nets(graphs, reduced) -> NetService:
    return NetService(graphs, reduced)


@pytest.fixture
def path3() -> Graph:
    """a - b - c with a, b, c = 1, 2, 3"""
    return graph_from_edges(3, [(1, 2), (2, 3)])


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def edge() -> Graph:
    return graph_from_edges(2, [(1, 2)])


@pytest.fixture
def point() -> Graph:
    return Graph(1, frozenset())


@pytest.fixture
def pinched(repository) -> Graph:
    return repository.fixture("pinched")


@pytest.fixture
def pinched_cf(graphs, pinched):
    return graphs.circle_form(pinched)


@pytest.fixture
def k4_cf(graphs, k4):
    return graphs.circle_form(k4)
