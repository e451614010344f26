import pytest

from app.core.config import settings
from app.core.exceptions import EnumerationBudgetExceeded, InvalidWalkError, NotACycleError
from app.models.chain import Chain
from app.models.cycle import PerfectCycle
from app.models.graph import cycle_graph, graph_from_edges
from app.models.homology import HomologyGroup
from app.models.simplex import Simplex1
from app.services.homology_service import HomologyService

a, b, c = 1, 2, 3


def chain1(*terms):
    return Chain.of(1, terms)


def test_homology_group_normalizes_torsion():
    assert HomologyGroup(2, (1, 6, 2)).torsion == (2, 6)
    assert str(HomologyGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(HomologyGroup(0)) == "0"
    with pytest.raises(ValueError):
        HomologyGroup(0, (2, 3))


@pytest.mark.parametrize("fixture,rank", [("c4", 1), ("k3", 0), ("point", 0), ("path3", 0), ("edge", 0)])
def test_h1_definitional_small(request, homology, fixture, rank):
    assert homology.h1_definitional(request.getfixturevalue(fixture)) == HomologyGroup(rank)


@pytest.mark.parametrize("n", [5, 6])
def test_h1_definitional_cycle_graphs(homology, n):
    assert homology.h1_definitional(cycle_graph(n)) == HomologyGroup(1)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_h1_definitional_long_cycle_graphs(homology, n):
    assert homology.h1_definitional(cycle_graph(n)) == HomologyGroup(1)


def test_h1_definitional_disconnected(homology):
    two_squares = graph_from_edges(8, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5)])
    assert homology.h1_definitional(two_squares) == HomologyGroup(2)


def test_h1_definitional_budget(homology, k4):
    with pytest.raises(EnumerationBudgetExceeded):
        homology.h1_definitional(k4, budget=1000)


def test_h1_definitional_is_relabeling_invariant(homology, c4):
    relabeled = c4.relabel({1: 3, 2: 1, 3: 4, 4: 2})
    assert homology.h1_definitional(relabeled) == homology.h1_definitional(c4)


@pytest.mark.parametrize("fixture", ["path3", "k3"])
def test_backtracking_walks_are_trivial(request, homology, fixture):
    graph = request.getfixturevalue(fixture)
    assert homology.is_trivial_definitional(graph, chain1((Simplex1(a, b, a), 1)))
    assert homology.is_trivial_definitional(graph, chain1((Simplex1(a, a, b), 1), (Simplex1(a, b, b), -1)))
    assert homology.is_trivial_definitional(graph, chain1((Simplex1(a, b, c), 1), (Simplex1(c, b, a), 1)))


def test_hamiltonian_cycle_of_c4_is_nontrivial(homology, c4):
    chain = PerfectCycle((1, 2, 3, 4, 1)).chain()
    assert not homology.is_trivial_definitional(c4, chain)
    assert homology.certificate(c4, chain) is None


def test_triangle_is_trivial_with_certificate(homology, chains, k3):
    chain = PerfectCycle((1, 2, 3, 1)).chain()
    certificate = homology.certificate(k3, chain)
    assert certificate is not None
    assert chains.reduce_mod_degenerate(chains.boundary(certificate)) == chain


def test_every_boundary_is_trivial(homology, chains, cubical, c4):
    for simplex in cubical.enumerate_simplices_2(c4)[::7]:
        assert homology.is_trivial_definitional(c4, chains.boundary_2(simplex))


def test_cycle_plus_reverse_is_trivial(homology, c4):
    cycle = PerfectCycle((1, 2, 3, 4, 1))
    assert homology.is_trivial_definitional(c4, cycle.chain() + cycle.reverse().chain())


def test_rejects_non_cycles(homology, path3):
    with pytest.raises(NotACycleError):
        homology.is_trivial_definitional(path3, chain1((Simplex1(a, a, b), 1)))


def test_rejects_chains_off_the_graph(homology, path3):
    with pytest.raises(InvalidWalkError):
        homology.is_trivial_definitional(path3, chain1((Simplex1(a, c, a), 1)))


def test_matrix_cache_is_bounded():
    service = HomologyService()
    first = service.matrices(graph_from_edges(2, []))
    assert service.matrices(graph_from_edges(2, [])) is first
    for n in range(3, settings.GRAPH_CACHE_SIZE + 8):
        service.matrices(graph_from_edges(n, []))
    assert service._matrices.cache_info().currsize == settings.GRAPH_CACHE_SIZE
