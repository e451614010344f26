"""
Graph Models - reflexive graphs stored as their simple-graph correspondents
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx


class Edge(NamedTuple):
    """Unordered pair of distinct vertices, stored with u < v"""
    u: int
    v: int

    @classmethod
    def of(cls, x: int, y: int) -> "Edge":
        if x == y:
            raise ValueError(f"Edge endpoints must differ: {x}")
        return cls(x, y) if x < y else cls(y, x)

    def __str__(self) -> str:
        return f"{{{self.u},{self.v}}}"


@dataclass(frozen=True)
class Graph:
    """
    Finite undirected reflexive graph on vertices 1..n

    Only the irreflexive part of the neighbor relation is stored; every vertex
    is implicitly its own neighbor.
    """
    vertex_count: int
    edges: FrozenSet[Edge]
    hamiltonian_hint: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("Graph needs at least one vertex")
        for edge in self.edges:
            if not (1 <= edge.u < edge.v <= self.vertex_count):
                raise ValueError(f"Edge {edge} outside 1..{self.vertex_count}")

    @classmethod
    def from_pairs(
        cls,
        vertex_count: int,
        pairs: Iterable[Tuple[int, int]],
        hamiltonian_hint: Optional[Tuple[int, ...]] = None
    ) -> "Graph":
        return cls(vertex_count, frozenset(Edge.of(x, y) for x, y in pairs), hamiltonian_hint)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbors(self) -> Dict[int, Tuple[int, ...]]:
        """Open neighborhoods, ascending"""
        adjacency: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for edge in self.edges:
            adjacency[edge.u].append(edge.v)
            adjacency[edge.v].append(edge.u)
        return {v: tuple(sorted(ns)) for v, ns in adjacency.items()}

    @cached_property
    def closed_neighbors(self) -> Dict[int, Tuple[int, ...]]:
        """Closed neighborhoods (vertex included), ascending"""
        return {v: tuple(sorted(ns + (v,))) for v, ns in self.neighbors.items()}

    @cached_property
    def _closed_sets(self) -> Dict[int, FrozenSet[int]]:
        return {v: frozenset(ns) for v, ns in self.closed_neighbors.items()}

    def adjacent(self, x: int, y: int) -> bool:
        """Reflexive adjacency: x ~ x always holds"""
        return y in self._closed_sets[x]

    def has_edge(self, x: int, y: int) -> bool:
        return x != y and Edge.of(x, y) in self.edges

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.sorted_edges)
        return g

    def relabel(self, mapping: Dict[int, int]) -> "Graph":
        return Graph.from_pairs(
            self.vertex_count,
            ((mapping[e.u], mapping[e.v]) for e in self.edges)
        )


@dataclass(frozen=True)
class CircleForm:
    """
    Relabeled Hamiltonian graph in which 1, 2, ..., n, 1 is a Hamiltonian cycle

    ``relabeling`` maps original labels to circle-form labels; ``source`` keeps
    the graph as it was given.
    """
    graph: Graph
    hamiltonian_order: Tuple[int, ...]
    relabeling: Tuple[Tuple[int, int], ...]
    source: Graph = field(compare=False)

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @cached_property
    def rim_edges(self) -> FrozenSet[Edge]:
        n = self.n
        if n < 2:
            return frozenset()
        rim = {Edge.of(i, i + 1) for i in range(1, n)}
        if n > 2:
            rim.add(Edge.of(n, 1))
        return frozenset(rim)

    def is_rim(self, edge: Edge) -> bool:
        return edge in self.rim_edges

    def to_original(self, v: int) -> int:
        return {new: old for old, new in self.relabeling}[v]

    def hamiltonian_walk(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1)) + (1,)


@dataclass(frozen=True)
class NetSubgraph:
    """Vertices and edges swept by trivial witness cycles of a net"""
    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    @property
    def is_empty(self) -> bool:
        return not self.vertices


def graph_from_edges(
    vertex_count: int,
    edges: Iterable[Tuple[int, int]],
    hamiltonian_hint: Optional[Tuple[int, ...]] = None
) -> Graph:
    return Graph.from_pairs(vertex_count, edges, hamiltonian_hint)


def cycle_graph(n: int) -> Graph:
    """C_n on 1..n with rim 1, 2, ..., n, 1"""
    if n < 3:
        raise ValueError(f"Cycle graph needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
