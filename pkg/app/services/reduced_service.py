"""
Reduced Model Service - H1 as the integer cycle space modulo the triangle lattice
"""
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import InvalidWalkError, NotInCycleSpaceError
from app.core.int_linalg import HermiteLattice, IntMatrix, kernel_basis, quotient_invariants
from app.models.chain import Chain
from app.models.cycle import PerfectCycle
from app.models.graph import Edge, Graph
from app.models.homology import HomologyGroup

logger = get_logger(__name__)

EdgeVector = Dict[Edge, int]
Triangle = Tuple[int, int, int]


def add_step(vector: EdgeVector, x: int, y: int, times: int = 1) -> None:
    """Traversal x -> y adds +1 on {x, y} when x < y and -1 otherwise"""
    if x == y or not times:
        return
    edge = Edge.of(x, y)
    value = vector.get(edge, 0) + (times if x < y else -times)
    if value:
        vector[edge] = value
    else:
        vector.pop(edge, None)


def walk_vector(walk: Tuple[int, ...]) -> EdgeVector:
    vector: EdgeVector = {}
    for x, y in zip(walk, walk[1:]):
        add_step(vector, x, y)
    return vector


def combine(*terms: Tuple[int, EdgeVector]) -> EdgeVector:
    total: EdgeVector = {}
    for scale, vector in terms:
        for edge, value in vector.items():
            updated = total.get(edge, 0) + scale * value
            if updated:
                total[edge] = updated
            else:
                total.pop(edge, None)
    return total


class ReducedModelService:
    """Service for the reduced model"""

    def __init__(self):
        self._triangle_lattices = lru_cache(maxsize=settings.GRAPH_CACHE_SIZE)(self._build_triangle_lattice)

    def edge_index(self, graph: Graph) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(graph.sorted_edges)}

    def triangles(self, graph: Graph) -> List[Triangle]:
        """3-cliques a < b < c in lexicographic order"""
        result = []
        for a in graph.vertices:
            for b in graph.neighbors[a]:
                if b <= a:
                    continue
                for c in graph.neighbors[b]:
                    if c > b and graph.has_edge(a, c):
                        result.append((a, b, c))
        return result

    def triangle_vector(self, triangle: Triangle) -> EdgeVector:
        a, b, c = triangle
        return walk_vector((a, b, c, a))

    def to_edge_vector(self, graph: Graph, cycle: PerfectCycle) -> EdgeVector:
        """
        Signed edge incidence of a perfect cycle

        Raises:
            InvalidWalkError: If a step is not a graph edge
        """
        for step in cycle.steps:
            if not graph.has_edge(step.source, step.target):
                raise InvalidWalkError(
                    "Walk steps along a missing edge",
                    details={"walk": list(cycle.walk), "step": [step.source, step.target]}
                )
        return walk_vector(cycle.walk)

    def chain_to_edge_vector(self, chain: Chain) -> EdgeVector:
        """Each (a b c) contributes the steps a -> b and b -> c"""
        vector: EdgeVector = {}
        for simplex, coefficient in chain:
            add_step(vector, simplex.a, simplex.b, coefficient)
            add_step(vector, simplex.b, simplex.c, coefficient)
        return vector

    def incidence_matrix(self, graph: Graph) -> IntMatrix:
        columns = [{e.v - 1: 1, e.u - 1: -1} for e in graph.sorted_edges]
        return IntMatrix(rows=graph.vertex_count, cols=len(columns), columns=columns)

    def cycle_space(self, graph: Graph) -> IntMatrix:
        """Integer kernel of the incidence matrix, columns over sorted edges"""
        return kernel_basis(self.incidence_matrix(graph))

    def triangle_matrix(self, graph: Graph) -> IntMatrix:
        index = self.edge_index(graph)
        columns = [
            {index[e]: v for e, v in self.triangle_vector(t).items()}
            for t in self.triangles(graph)
        ]
        return IntMatrix(rows=len(index), cols=len(columns), columns=columns)

    def triangle_lattice(self, graph: Graph) -> HermiteLattice:
        """Echelon lattice of triangle vectors, cached per graph"""
        return self._triangle_lattices(graph)

    def _build_triangle_lattice(self, graph: Graph) -> HermiteLattice:
        lattice = HermiteLattice(len(graph.edges), track_certificates=True)
        for label, column in enumerate(self.triangle_matrix(graph).columns):
            lattice.add(column, label=label)
        logger.debug(f"Triangle lattice: {lattice.generator_count} triangles, rank {lattice.rank}")
        return lattice

    def dense(self, graph: Graph, vector: EdgeVector) -> Dict[int, int]:
        """
        Sparse index form of an edge vector

        Raises:
            NotInCycleSpaceError: If the support leaves the graph
        """
        index = self.edge_index(graph)
        result = {}
        for edge, value in vector.items():
            if edge not in index:
                raise NotInCycleSpaceError(
                    f"Edge {edge} is not in the graph",
                    details={"edge": [edge.u, edge.v]}
                )
            result[index[edge]] = value
        return result

    def _check_cycle_space(self, graph: Graph, vector: EdgeVector) -> Dict[int, int]:
        sparse = self.dense(graph, vector)
        balance: Dict[int, int] = {}
        for edge, value in vector.items():
            balance[edge.v] = balance.get(edge.v, 0) + value
            balance[edge.u] = balance.get(edge.u, 0) - value
        unbalanced = sorted(v for v, b in balance.items() if b)
        if unbalanced:
            raise NotInCycleSpaceError(
                "Edge vector has nonzero vertex boundary",
                details={"vertices": unbalanced}
            )
        return sparse

    def is_trivial_reduced(self, graph: Graph, vector: EdgeVector) -> bool:
        """
        True iff vector is an integer combination of triangles

        Raises:
            NotInCycleSpaceError: If vector is not a cycle of graph
        """
        sparse = self._check_cycle_space(graph, vector)
        return self.triangle_lattice(graph).contains(sparse)

    def is_trivial_walk(self, graph: Graph, cycle: PerfectCycle) -> bool:
        return self.is_trivial_reduced(graph, self.to_edge_vector(graph, cycle))

    def certificate(self, graph: Graph, vector: EdgeVector) -> Optional[List[Tuple[Triangle, int]]]:
        """Triangles with coefficients summing to vector, or None when nontrivial"""
        sparse = self._check_cycle_space(graph, vector)
        combination = self.triangle_lattice(graph).certificate(sparse)
        if combination is None:
            return None
        triangles = self.triangles(graph)
        return sorted((triangles[label], k) for label, k in combination.items() if k)

    def h1_reduced(self, graph: Graph) -> HomologyGroup:
        """Cycle lattice modulo triangle lattice"""
        rank, torsion = quotient_invariants(self.cycle_space(graph), self.triangle_matrix(graph))
        group = HomologyGroup(rank, tuple(torsion))
        logger.info(f"H1 (reduced) on {graph.vertex_count} vertices: {group}")
        return group
