"""
Graph Service - Hamiltonian cycles, circle forms and diagonal edges
"""
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from atams.logging import get_logger

from app.core.exceptions import InvalidWalkError, NotHamiltonianError
from app.models.graph import CircleForm, Edge, Graph

logger = get_logger(__name__)


class GraphService:
    """Service for graph_core operations"""

    def find_hamiltonian_cycle(self, graph: Graph) -> Optional[Tuple[int, ...]]:
        """
        Deterministic Hamiltonian cycle search

        Backtracks from vertex 1, trying neighbors in ascending label order.

        Args:
            graph: Graph to search

        Returns:
            Closed walk v1, ..., vn, v1 or None
        """
        n = graph.vertex_count
        if n < 3 or not self.is_connected(graph):
            return None

        neighbors = graph.neighbors
        path = [1]
        visited = {1}

        def extend() -> bool:
            if len(path) == n:
                return graph.has_edge(path[-1], 1)
            for nxt in neighbors[path[-1]]:
                if nxt in visited:
                    continue
                path.append(nxt)
                visited.add(nxt)
                if extend():
                    return True
                path.pop()
                visited.discard(nxt)
            return False

        if not extend():
            logger.debug(f"No Hamiltonian cycle on {n} vertices")
            return None
        return tuple(path) + (1,)

    def to_circle_form(self, graph: Graph, cycle: Sequence[int]) -> CircleForm:
        """
        Relabel graph so that the given Hamiltonian cycle becomes 1, 2, ..., n, 1

        Args:
            graph: Host graph
            cycle: Hamiltonian cycle, closed (v1..vn,v1) or open (v1..vn)

        Returns:
            CircleForm carrying the relabeling old -> new

        Raises:
            InvalidWalkError: If cycle is not a Hamiltonian cycle of graph
        """
        order = tuple(cycle)
        if len(order) == graph.vertex_count + 1 and order[0] == order[-1]:
            order = order[:-1]
        if sorted(order) != list(graph.vertices) or graph.vertex_count < 3:
            raise InvalidWalkError(
                "Sequence does not visit every vertex exactly once",
                details={"cycle": list(cycle), "vertex_count": graph.vertex_count}
            )
        for x, y in zip(order, order[1:] + order[:1]):
            if not graph.has_edge(x, y):
                raise InvalidWalkError(
                    "Hamiltonian sequence uses a missing edge",
                    details={"cycle": list(cycle), "edge": [x, y]}
                )

        mapping = {old: new for new, old in enumerate(order, start=1)}
        relabeled = graph.relabel(mapping)
        return CircleForm(
            graph=relabeled,
            hamiltonian_order=order,
            relabeling=tuple(sorted(mapping.items())),
            source=graph,
        )

    def circle_form(self, graph: Graph) -> CircleForm:
        """
        Circle form from the pinned Hamiltonian cycle, else from search

        Raises:
            NotHamiltonianError: If no Hamiltonian cycle exists
        """
        cycle = graph.hamiltonian_hint or self.find_hamiltonian_cycle(graph)
        if cycle is None:
            raise NotHamiltonianError(
                "Graph has no Hamiltonian cycle",
                details={"vertex_count": graph.vertex_count, "edges": len(graph.edges)}
            )
        cf = self.to_circle_form(graph, cycle)
        logger.debug(f"Circle form fixed by order {list(cf.hamiltonian_order)}")
        return cf

    def diagonal_edges(self, cf: CircleForm) -> FrozenSet[Edge]:
        """All edges of the circle form that are not rim edges"""
        return frozenset(e for e in cf.graph.edges if not cf.is_rim(e))

    def diagonal_neighbors(self, cf: CircleForm, v: int) -> Tuple[int, ...]:
        """Neighbors of v other than its rim neighbors, split by position on the rim"""
        n = cf.n
        if v == 1:
            excluded = {2, n}
        elif v == n:
            excluded = {n - 1, 1}
        else:
            excluded = {v - 1, v + 1}
        return tuple(u for u in cf.graph.neighbors[v] if u not in excluded)

    def connected_components(self, graph: Graph) -> List[Set[int]]:
        components = [set(c) for c in nx.connected_components(graph.to_networkx())]
        return sorted(components, key=min)

    def is_connected(self, graph: Graph) -> bool:
        return len(self.connected_components(graph)) == 1
