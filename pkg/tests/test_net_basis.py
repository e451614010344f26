import random

import pytest

from app.core.config import settings
from app.core.exceptions import InvalidChordError
from app.models.graph import Edge, NetSubgraph, complete_graph, cycle_graph, graph_from_edges
from app.models.homology import Net, SpanningSet
from app.services.net_service import NetService

G1 = (Edge(1, 3), Edge(2, 4), Edge(3, 5), Edge(4, 6), Edge(5, 7))
G2 = (Edge(1, 6), Edge(1, 7), Edge(2, 4), Edge(3, 5), Edge(4, 6), Edge(5, 7))


def rim_with(n, chords):
    return graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)] + list(chords), tuple(range(1, n + 1)))


@pytest.fixture
def heptagon_cf(graphs):
    return graphs.circle_form(rim_with(7, [(2, 5)]))


@pytest.fixture
def fan_cf(graphs):
    """Pentagon with the fan 13, 14 from vertex 1"""
    return graphs.circle_form(rim_with(5, [(1, 3), (1, 4)]))


@pytest.fixture
def hexagon_cf(graphs):
    """Hexagon with the single chord 14; no triangles"""
    return graphs.circle_form(rim_with(6, [(1, 4)]))


# Typed cycles

@pytest.mark.parametrize("cycle_type,walk", [
    (1, (2, 5, 6, 7, 1, 2)),
    (2, (2, 5, 4, 3, 2)),
    (3, (5, 2, 1, 7, 6, 5)),
    (4, (5, 2, 3, 4, 5)),
])
def test_typed_cycles(nets, heptagon_cf, cycle_type, walk):
    typed = nets.typed_cycle(heptagon_cf, Edge(2, 5), cycle_type)
    assert typed.walk.walk == walk
    assert typed.chord == Edge(2, 5)


def test_typed_cycle_preconditions(nets, heptagon_cf):
    with pytest.raises(InvalidChordError):
        nets.typed_cycle(heptagon_cf, Edge(1, 2), 1)
    with pytest.raises(InvalidChordError):
        nets.typed_cycle(heptagon_cf, Edge(2, 5), 5)


def test_typed_cycles_walk_on_graph_edges(nets, graphs, pinched_cf):
    for chord in graphs.diagonal_edges(pinched_cf):
        for cycle_type in (1, 2, 3, 4):
            walk = nets.typed_cycle(pinched_cf, chord, cycle_type).walk
            assert all(pinched_cf.graph.has_edge(s.source, s.target) for s in walk.steps)


@pytest.mark.parametrize("name", ["k4", "k5", "pinched"])
def test_type_relations_hold(nets, graphs, repository, name):
    cf = graphs.circle_form(repository.fixture(name))
    for chord in graphs.diagonal_edges(cf):
        assert nets.type_relations_check(cf, chord)


def test_type_relations_on_triangle_free_graphs(nets, heptagon_cf, hexagon_cf):
    assert nets.type_relations_check(heptagon_cf, Edge(2, 5))
    assert nets.type_relations_check(hexagon_cf, Edge(1, 4))


# Edge-connectedness and nets

def test_pinched_witnesses(nets, pinched_cf):
    assert nets.edge_connected(pinched_cf, Edge(1, 3), Edge(5, 7)).walk == (1, 3, 5, 7, 6, 4, 2, 1)
    assert nets.edge_connected(pinched_cf, Edge(5, 7), Edge(1, 6)).walk == (1, 6, 5, 7, 1)
    assert nets.edge_connected(pinched_cf, Edge(1, 3), Edge(1, 6)) is None


def test_edge_connected_preconditions(nets, pinched_cf):
    with pytest.raises(InvalidChordError):
        nets.edge_connected(pinched_cf, Edge(1, 3), Edge(1, 3))
    with pytest.raises(InvalidChordError):
        nets.edge_connected(pinched_cf, Edge(1, 2), Edge(1, 3))


def test_pinched_nets(nets, pinched_cf):
    assert [net.edges for net in nets.nets(pinched_cf)] == [G1, G2]


def test_nets_are_maximal(nets, graphs, pinched_cf):
    diagonals = graphs.diagonal_edges(pinched_cf)
    for net in nets.nets(pinched_cf):
        for outside in diagonals - set(net.edges):
            assert any(nets.edge_connected(pinched_cf, outside, member) is None for member in net.edges)


def test_k4_net(nets, k4_cf):
    assert [net.edges for net in nets.nets(k4_cf)] == [(Edge(1, 3), Edge(2, 4))]
    assert nets.edge_connected(k4_cf, Edge(2, 4), Edge(1, 3)).walk == (1, 3, 2, 4, 1)


def test_cycle_graph_has_no_nets(nets, graphs):
    assert nets.nets(graphs.circle_form(cycle_graph(6))) == []


def test_singleton_net_has_empty_subgraph(nets, hexagon_cf):
    found = nets.nets(hexagon_cf)
    assert [net.edges for net in found] == [(Edge(1, 4),)]
    assert nets.net_subgraph(hexagon_cf, found[0]).is_empty


# Subgraphs, spanning sets and cardinality

def test_k4_subgraph_and_spanning_set(nets, k4_cf, k4):
    net = Net((Edge(1, 3), Edge(2, 4)))
    subgraph = nets.net_subgraph(k4_cf, net)
    assert subgraph.vertices == frozenset(k4.vertices)
    assert subgraph.edges == k4.edges
    spanning = nets.spanning_set(k4_cf, subgraph)
    assert spanning.tree_edges == (Edge(1, 2), Edge(1, 4), Edge(2, 3))
    assert spanning.chord_part == ()
    assert nets.basis_subgraph(spanning).chords == ()


def test_k4_cardinality_counter_instance(nets, k4_cf):
    subgraph = nets.net_subgraph(k4_cf, Net((Edge(1, 3), Edge(2, 4))))
    report = nets.cardinality_check(k4_cf, subgraph, nets.spanning_set(k4_cf, subgraph))
    assert (report.formula_value, report.actual) == (-1, 0)
    assert report.rim_acyclic is False
    assert report.matches is False
    assert "cycle" in report.note


def test_cardinality_matches_on_acyclic_rim(nets, fan_cf):
    [net] = nets.nets(fan_cf)
    assert net.edges == (Edge(1, 3), Edge(1, 4))
    subgraph = nets.net_subgraph(fan_cf, net)
    assert subgraph.vertices == {1, 3, 4}
    spanning = nets.spanning_set(fan_cf, subgraph)
    assert spanning.tree_edges == (Edge(1, 3), Edge(3, 4))
    assert spanning.chord_part == (Edge(1, 3),)
    report = nets.cardinality_check(fan_cf, subgraph, spanning)
    assert report.rim_acyclic and report.matches
    assert (report.formula_value, report.actual) == (1, 1)


def test_cardinality_skips_empty_subgraph(nets, k4_cf):
    empty = NetSubgraph(frozenset(), frozenset())
    report = nets.cardinality_check(k4_cf, empty, SpanningSet((), ()))
    assert report.formula_value is None
    assert report.note == "empty subgraph skipped"


def test_spanning_set_takes_a_chord_only_when_needed(nets, graphs):
    cf = graphs.circle_form(rim_with(6, [(1, 4)]))
    subgraph = NetSubgraph(frozenset({1, 2, 4, 5}), frozenset({Edge(1, 2), Edge(4, 5), Edge(1, 4)}))
    spanning = nets.spanning_set(cf, subgraph)
    assert spanning.chord_part == (Edge(1, 4),)
    forest = NetSubgraph(frozenset({1, 2, 3, 4}), frozenset({Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(1, 4)}))
    assert nets.spanning_set(cf, forest).chord_part == ()


# Basis

def test_c4_basis(nets, graphs, c4):
    basis = nets.h1_basis(graphs.circle_form(c4))
    assert basis.includes_hamiltonian
    assert basis.chord_classes == []
    assert basis.rank_claim == 1


def test_k4_basis(nets, k4_cf):
    basis = nets.h1_basis(k4_cf)
    assert not basis.includes_hamiltonian
    assert basis.chord_classes == []
    assert basis.rank_claim == 0
    assert "Hamiltonian class is trivial" in basis.notes


def test_fan_basis_filters_trivial_chord_class(nets, fan_cf):
    basis = nets.h1_basis(fan_cf)
    assert basis.rank_claim == 0
    assert [entry.chord for entry in basis.filtered_trivial] == [Edge(1, 3)]
    assert basis.filtered_trivial[0].walk.walk == (1, 3, 4, 5, 1)


def test_pinched_basis(nets, reduced, pinched_cf):
    basis = nets.h1_basis(pinched_cf)
    assert basis.includes_hamiltonian
    assert basis.rank_claim == reduced.h1_reduced(pinched_cf.graph).rank == 1
    assert [outcome.net.edges for outcome in basis.nets] == [G1, G2]
    assert basis.chord_classes == []
    assert any(
        (o.cardinality.formula_value, o.cardinality.actual, o.cardinality.rim_acyclic) == (-1, 0, False)
        for o in basis.nets
    )


def test_isolated_chord_is_surfaced(nets, reduced, hexagon_cf):
    basis = nets.h1_basis(hexagon_cf)
    assert basis.isolated_chords == [Edge(1, 4)]
    assert basis.rank_claim == 1
    assert reduced.h1_reduced(hexagon_cf.graph).rank == 2
    assert nets.basis_span_check(hexagon_cf, basis) == (True, False)


@pytest.mark.parametrize("cycle_type", [1, 2, 3, 4])
def test_basis_type_choice(nets, graphs, repository, cycle_type):
    basis = nets.h1_basis(graphs.circle_form(repository.fixture("k5")), cycle_type)
    assert basis.cycle_type == cycle_type
    assert basis.rank_claim == 0


def test_basis_rejects_bad_type(nets, k4_cf):
    with pytest.raises(InvalidChordError):
        nets.h1_basis(k4_cf, 7)


@pytest.mark.parametrize("graph", [cycle_graph(n) for n in range(4, 9)] + [complete_graph(4), complete_graph(5)])
def test_basis_agrees_on_cycle_and_complete_graphs(nets, graphs, reduced, graph):
    cf = graphs.circle_form(graph)
    basis = nets.h1_basis(cf)
    assert basis.rank_claim == reduced.h1_reduced(graph).rank
    assert nets.basis_span_check(cf, basis) == (True, True)


@pytest.mark.slow
def test_basis_claims_on_seeded_graphs(nets, graphs, reduced, repository):
    rng = random.Random(20)
    for _ in range(20):
        graph = repository.random_hamiltonian_graph(rng.randint(4, 7), rng)
        basis = nets.h1_basis(graphs.circle_form(graph))
        group = reduced.h1_reduced(graph)
        assert not group.torsion
        # a claim may differ from the rank; it never exceeds the cycle-space rank
        assert basis.rank_claim <= reduced.cycle_space(graph).cols


# Audits

@pytest.mark.parametrize("name", ["c4", "k4", "k5", "pinched"])
def test_spanning_family_generates(nets, graphs, repository, name):
    assert nets.spanning_family_check(graphs.circle_form(repository.fixture(name)))


def test_k4_net_subgraph_holds_only_trivial_cycles(nets, k4_cf):
    assert nets.net_soundness_check(k4_cf, Net((Edge(1, 3), Edge(2, 4)))) == []


def test_net_subgraph_can_hold_a_nontrivial_cycle(nets, pinched_cf, reduced):
    """
    The pinched strip is a counterexample to net soundness

    The subgraph of the first net carries the rim cycle 1..8,1, which
    is nontrivial, so the check must report it.
    """
    offending = nets.net_soundness_check(pinched_cf, Net(G1))
    assert all(not reduced.is_trivial_walk(pinched_cf.graph, c) for c in offending)
    assert tuple(range(1, 9)) + (1,) in [c.walk for c in offending]


def test_trivial_cycle_index_cache_is_bounded(graphs):
    service = NetService(graphs)
    cfs = [graphs.circle_form(cycle_graph(n)) for n in range(4, settings.GRAPH_CACHE_SIZE + 9)]
    first = service.trivial_cycle_index(cfs[0], cap=4)
    assert service.trivial_cycle_index(cfs[0], cap=4) is first
    for cf in cfs[1:]:
        service.trivial_cycle_index(cf, cap=4)
    assert service._indices.cache_info().currsize == settings.GRAPH_CACHE_SIZE
