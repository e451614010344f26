import random

import networkx as nx
import pytest

from app.core.exceptions import InvalidChordError, InvalidWalkError, NotACycleError
from app.models.chain import Chain
from app.models.cycle import EdgeStep, PerfectCycle, ProperCycle
from app.models.graph import Edge, complete_graph, cycle_graph, graph_from_edges
from app.models.simplex import Simplex1, Simplex2
from app.services.reduced_service import combine, walk_vector

a, b, c = 1, 2, 3


def chain1(*terms):
    return Chain.of(1, terms)


def cycle_sum(cycles):
    total = Chain.zero(1)
    for cycle in cycles:
        total = total + cycle.chain()
    return total


# Perfect and proper cycles

def test_perfect_cycle_shape():
    cycle = PerfectCycle((1, 3, 5, 7, 6, 4, 2, 1))
    assert cycle.length == 7
    assert cycle.is_vertex_simple
    assert cycle.steps[0] == EdgeStep(1, 3)
    assert EdgeStep(1, 3).simplex() == Simplex1(1, 1, 3)
    assert str(cycle) == "13576421"
    assert cycle.reverse().walk == (1, 2, 4, 6, 7, 5, 3, 1)
    assert cycle.rotated_to(2).walk == (5, 7, 6, 4, 2, 1, 3, 5)
    assert PerfectCycle((1, 11, 3, 1)).notation() == "1,11,3,1"
    assert not PerfectCycle((1, 2, 1, 2, 1)).is_vertex_simple


@pytest.mark.parametrize("walk", [(1, 2), (1, 2, 3), (1, 1, 2, 1)])
def test_perfect_cycle_rejects_bad_walks(walk):
    with pytest.raises(InvalidWalkError):
        PerfectCycle(walk)


def test_proper_cycle_requires_matched_endpoints():
    proper = ProperCycle((Simplex1(1, 2, 3), Simplex1(3, 3, 1)))
    assert proper.chain() == chain1((Simplex1(1, 2, 3), 1), (Simplex1(3, 3, 1), 1))
    with pytest.raises(InvalidWalkError):
        ProperCycle((Simplex1(1, 2, 3), Simplex1(2, 2, 1)))
    with pytest.raises(InvalidWalkError):
        ProperCycle(())


# Normalization

def test_normalize_worked_example(cycles, homology, path3):
    chain = chain1(
        (Simplex1(a, b, c), 2), (Simplex1(b, b, c), -1), (Simplex1(b, a, a), 1), (Simplex1(c, b, a), 1)
    )
    perfect = cycles.normalize_to_perfect(path3, chain)
    assert [p.walk for p in perfect] == [(1, 2, 1, 2, 1), (2, 3, 2, 3, 2)]
    assert homology.is_trivial_definitional(path3, chain - cycle_sum(perfect))


def test_normalize_aba(cycles, edge):
    perfect = cycles.normalize_to_perfect(edge, chain1((Simplex1(1, 2, 1), 1)))
    assert [p.walk for p in perfect] == [(1, 2, 1)]
    assert perfect[0].chain() == chain1((Simplex1(1, 1, 2), 1), (Simplex1(2, 2, 1), 1))


def test_normalize_zero(cycles, edge):
    assert cycles.normalize_to_perfect(edge, Chain.zero(1)) == []
    assert cycles.normalize_to_perfect(edge, chain1((Simplex1(1, 1, 1), 4))) == []


def test_normalize_rejects_non_cycles(cycles, path3):
    with pytest.raises(NotACycleError):
        cycles.normalize_to_perfect(path3, chain1((Simplex1(a, b, c), 1)))


def test_to_proper_cycle(cycles):
    chain = chain1((Simplex1(1, 2, 3), 1), (Simplex1(1, 3, 3), -1))
    proper = cycles.to_proper_cycle(chain)
    assert [p.generators for p in proper] == [(Simplex1(1, 2, 3), Simplex1(3, 3, 1))]
    assert cycles.to_proper_cycle(chain1((Simplex1(1, 2, 1), 1)))[0].generators == (Simplex1(1, 2, 1),)


def _random_cycle(graph, rng):
    """Sum of random closed simplex walks with random signs"""
    closed = graph.closed_neighbors
    total = Chain.zero(1)
    for _ in range(rng.randint(1, 3)):
        start = rng.choice(list(graph.vertices))
        current, terms = start, []
        for _ in range(rng.randint(1, 4)):
            middle = rng.choice(closed[current])
            end = rng.choice(closed[middle])
            terms.append(Simplex1(current, middle, end))
            current = end
        # close the walk through a shortest path of edge steps
        route = nx.shortest_path(graph.to_networkx(), current, start)
        terms.extend(Simplex1(x, x, y) for x, y in zip(route, route[1:]))
        total = total + rng.choice((1, -1, 2)) * Chain.of(1, ((t, 1) for t in terms))
    return total


def _normalization_round(cycles, homology, graph, rng):
    chain = _random_cycle(graph, rng)
    perfect = cycles.normalize_to_perfect(graph, chain)
    assert homology.is_trivial_definitional(graph, chain - cycle_sum(perfect))


def test_normalization_is_sound_on_small_graphs(cycles, homology, path3, c4):
    rng = random.Random(17)
    for graph in (path3, c4):
        for _ in range(10):
            _normalization_round(cycles, homology, graph, rng)


@pytest.mark.slow
def test_normalization_is_sound_on_seeded_corpus(cycles, homology, repository):
    rng = random.Random(2024)
    pool = [cycle_graph(5), complete_graph(4), graph_from_edges(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])]
    pool.extend(repository.random_connected_graph(rng.randint(3, 5), rng, p=0.3) for _ in range(7))
    for round_ in range(100):
        _normalization_round(cycles, homology, pool[round_ % len(pool)], rng)


# Triangles and splitting

def test_triangle_witness(cycles, homology, chains, k3):
    witness = cycles.triangle_witness(k3, 1, 2, 3)
    assert witness == Simplex2((1, 3, 3), (1, 2, 2), (1, 1, 2))
    triangle = PerfectCycle((1, 2, 3, 1)).chain()
    assert homology.is_trivial_definitional(k3, triangle - chains.boundary_2(witness))


def test_triangle_witness_bounds_every_k4_triangle(cycles, homology, chains, k4):
    for x, y, z in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (3, 1, 2)]:
        boundary = chains.boundary_2(cycles.triangle_witness(k4, x, y, z))
        assert homology.is_trivial_definitional(k4, boundary)


@pytest.mark.parametrize("vertices", [(1, 1, 2), (1, 2, 3)])
def test_triangle_witness_preconditions(cycles, path3, vertices):
    with pytest.raises(InvalidChordError):
        cycles.triangle_witness(path3, *vertices)


def test_splitting_edges(cycles, k4, c4, pinched):
    assert cycles.splitting_edges(k4, PerfectCycle((1, 2, 3, 4, 1))) == {Edge(1, 3), Edge(2, 4)}
    assert cycles.splitting_edges(c4, PerfectCycle((1, 2, 3, 4, 1))) == frozenset()
    assert cycles.splitting_edges(pinched, PerfectCycle((1, 3, 5, 7, 1))) == frozenset()
    assert cycles.splitting_edges(pinched, PerfectCycle((1, 3, 5, 7, 6, 4, 2, 1))) == {
        Edge(1, 6), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(5, 6), Edge(1, 7)
    }


def test_splitting_edges_require_simple_cycles(cycles, k3):
    with pytest.raises(InvalidWalkError):
        cycles.splitting_edges(k3, PerfectCycle((1, 2, 1, 3, 1)))


def test_is_completely_perfect(cycles, pinched):
    c5 = cycle_graph(5)
    assert cycles.is_completely_perfect(c5, PerfectCycle((1, 2, 3, 4, 5, 1)))
    assert not cycles.is_completely_perfect(complete_graph(4), PerfectCycle((1, 2, 3, 4, 1)))
    assert not cycles.is_completely_perfect(pinched, PerfectCycle(tuple(range(1, 9)) + (1,)))
    with pytest.raises(InvalidChordError):
        cycles.is_completely_perfect(c5, PerfectCycle((1, 2, 1)))


def test_cycle_components(cycles, k4, c4, k3):
    pieces = cycles.cycle_components(k4, PerfectCycle((1, 2, 3, 4, 1)))
    assert [p.walk for p in pieces] == [(1, 2, 3, 1), (1, 3, 4, 1)]
    assert [p.walk for p in cycles.cycle_components(c4, PerfectCycle((1, 2, 3, 4, 1)))] == [(1, 2, 3, 4, 1)]
    assert [p.walk for p in cycles.cycle_components(k3, PerfectCycle((1, 2, 3, 1)))] == [(1, 2, 3, 1)]


def test_cycle_components_preserve_the_class(cycles, homology, k4):
    cycle = PerfectCycle((1, 2, 3, 4, 1))
    pieces = cycles.cycle_components(k4, cycle)
    assert homology.is_trivial_definitional(k4, cycle.chain() - cycle_sum(pieces))


def test_cycle_components_of_pinched_rim(cycles, reduced, pinched):
    rim = PerfectCycle(tuple(range(1, 9)) + (1,))
    pieces = cycles.cycle_components(pinched, rim)
    for piece in pieces:
        assert piece.length == 3 or cycles.is_completely_perfect(pinched, piece)
    total = combine(*((1, walk_vector(p.walk)) for p in pieces))
    assert total == walk_vector(rim.walk)


def test_fan_decomposition_carries_the_boundary(cycles, chains, reduced, cubical, c4):
    for simplex in cubical.enumerate_simplices_2(c4)[::5]:
        pieces = cycles.fan_decomposition(c4, simplex)
        total = combine(*((1, walk_vector(p.walk)) for p in pieces))
        assert total == reduced.chain_to_edge_vector(chains.boundary_2(simplex))


def test_fan_decomposition_of_triangle_witness(cycles, k3):
    pieces = cycles.fan_decomposition(k3, Simplex2((1, 3, 3), (1, 2, 2), (1, 1, 2)))
    assert all(p.length in (2, 3) for p in pieces)
    assert [p.walk for p in pieces if p.length == 3] == [(2, 3, 1, 2)]
