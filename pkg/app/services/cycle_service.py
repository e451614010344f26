"""
Cycle Service - normalization of 1-cycles to perfect cycles and the
splitting calculus for vertex-simple cycles
"""
from collections import Counter, defaultdict
from typing import Dict, FrozenSet, List, Optional, Tuple

from atams.logging import get_logger

from app.core.exceptions import InvalidChordError, InvalidWalkError, NotACycleError
from app.models.chain import Chain
from app.models.cycle import PerfectCycle, ProperCycle
from app.models.graph import Edge, Graph
from app.models.simplex import Simplex1, Simplex2
from app.services.chain_service import ChainService

logger = get_logger(__name__)


def _stitch(arcs: Counter) -> List[List[Tuple[int, int, object]]]:
    """
    Split a balanced multiset of directed arcs into closed tours

    Each tour starts at the smallest vertex with an unused arc and keeps
    taking the smallest unused arc out of the current vertex until none is
    left there. Arcs are (source, target, payload) triples.
    """
    outgoing: Dict[int, List[Tuple[int, object]]] = defaultdict(list)
    for (source, target, payload), count in arcs.items():
        outgoing[source].extend([(target, payload)] * count)
    for source in outgoing:
        outgoing[source].sort(key=lambda item: (item[0], tuple(item[1] or ())), reverse=True)

    tours = []
    while True:
        starts = [v for v, items in outgoing.items() if items]
        if not starts:
            return tours
        current = min(starts)
        tour = []
        while outgoing[current]:
            target, payload = outgoing[current].pop()
            tour.append((current, target, payload))
            current = target
        tours.append(tour)


def canonical_walk(vertices: List[int]) -> Tuple[int, ...]:
    """Closed walk of a vertex-simple cycle, from its least vertex toward the smaller neighbor"""
    i = vertices.index(min(vertices))
    rotated = vertices[i:] + vertices[:i]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated) + (rotated[0],)


class CycleService:
    """Service for cycle_rewrite operations"""

    def __init__(self, chains: Optional[ChainService] = None):
        self.chains = chains or ChainService()

    def _check_cycle(self, chain: Chain) -> Chain:
        reduced = self.chains.reduce_mod_degenerate(chain)
        if chain.dimension != 1 or self.chains.boundary(reduced):
            raise NotACycleError("Chain has nonzero boundary", details={"chain": str(chain)})
        return reduced

    @staticmethod
    def _positive_terms(chain: Chain) -> List[Tuple[Simplex1, int]]:
        """Negative terms replaced by reversed simplices with positive coefficient"""
        terms = []
        for simplex, coefficient in chain:
            if coefficient < 0:
                simplex = Simplex1(simplex.c, simplex.b, simplex.a)
            terms.append((simplex, abs(coefficient)))
        return terms

    def _check_walk(self, graph: Graph, cycle: PerfectCycle) -> None:
        for step in cycle.steps:
            if not graph.has_edge(step.source, step.target):
                raise InvalidWalkError(
                    "Walk steps along a missing edge",
                    details={"walk": list(cycle.walk), "step": [step.source, step.target]}
                )

    def normalize_to_perfect(self, graph: Graph, chain: Chain) -> List[PerfectCycle]:
        """
        Perfect cycles whose sum is homologous to chain

        Negative terms are reversed, each (a b c) is split into the steps
        a -> b and b -> c, and the resulting steps are stitched into closed
        tours.

        Args:
            graph: Host graph
            chain: 1-cycle

        Returns:
            Perfect cycles in stitching order (empty for the zero cycle)

        Raises:
            NotACycleError: If chain has nonzero boundary
        """
        reduced = self._check_cycle(chain)
        steps: Counter = Counter()
        for simplex, coefficient in self._positive_terms(reduced):
            for x, y in ((simplex.a, simplex.b), (simplex.b, simplex.c)):
                if x != y:
                    steps[(x, y, None)] += coefficient

        cycles = []
        for tour in _stitch(steps):
            walk = tuple(x for x, _, _ in tour) + (tour[0][0],)
            cycle = PerfectCycle(walk)
            self._check_walk(graph, cycle)
            cycles.append(cycle)
        logger.debug(f"Normalized {len(reduced)}-term cycle into {len(cycles)} perfect cycles")
        return cycles

    def to_proper_cycle(self, chain: Chain) -> List[ProperCycle]:
        """
        Rewrite a 1-cycle as endpoint-matched sequences of plus-signed generators

        Raises:
            NotACycleError: If chain has nonzero boundary
        """
        reduced = self._check_cycle(chain)
        arcs: Counter = Counter()
        for simplex, coefficient in self._positive_terms(reduced):
            arcs[(simplex.a, simplex.c, simplex)] += coefficient
        return [ProperCycle(tuple(payload for _, _, payload in tour)) for tour in _stitch(arcs)]

    def reverse(self, cycle: PerfectCycle) -> PerfectCycle:
        return cycle.reverse()

    def triangle_witness(self, graph: Graph, a: int, b: int, c: int) -> Simplex2:
        """
        2-simplex whose boundary is the triangle a -> b -> c -> a up to degenerates

        Raises:
            InvalidChordError: If a, b, c are not mutually adjacent distinct vertices
        """
        if len({a, b, c}) < 3 or not (graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(c, a)):
            raise InvalidChordError(
                "Triangle witness needs three mutually adjacent vertices",
                details={"vertices": [a, b, c]}
            )
        return Simplex2((a, c, c), (a, b, b), (a, a, b))

    def _require_simple(self, graph: Graph, cycle: PerfectCycle) -> None:
        if not cycle.is_vertex_simple:
            raise InvalidWalkError("Cycle repeats a vertex", details={"walk": list(cycle.walk)})
        self._check_walk(graph, cycle)

    def splitting_edges(self, graph: Graph, cycle: PerfectCycle) -> FrozenSet[Edge]:
        """Graph edges joining two cycle vertices that are not consecutive on the cycle"""
        self._require_simple(graph, cycle)
        vertices = cycle.vertices
        m = len(vertices)
        chords = set()
        for i in range(m):
            for j in range(i + 2, m):
                if i == 0 and j == m - 1:
                    continue
                if graph.has_edge(vertices[i], vertices[j]):
                    chords.add(Edge.of(vertices[i], vertices[j]))
        return frozenset(chords)

    def is_completely_perfect(self, graph: Graph, cycle: PerfectCycle) -> bool:
        """
        Raises:
            InvalidChordError: For cycles of length 3 or less
        """
        if cycle.length <= 3:
            raise InvalidChordError(
                "Complete perfection is defined for cycles longer than 3",
                details={"walk": list(cycle.walk)}
            )
        return not self.splitting_edges(graph, cycle)

    def cycle_components(self, graph: Graph, cycle: PerfectCycle) -> List[PerfectCycle]:
        """
        Split along the least splitting edge until no piece has one

        For the chord {v_i, v_j}, i < j, the pieces are v_i .. v_j, v_i and
        v_i, v_j .. v_m, v_1 .. v_i; their chains sum to the original one
        modulo boundaries.
        """
        chords = self.splitting_edges(graph, cycle)
        if cycle.length <= 3 or not chords:
            return [cycle]
        chord = min(chords)
        vertices = list(cycle.vertices)
        i, j = sorted((vertices.index(chord.u), vertices.index(chord.v)))
        inner = vertices[i:j + 1] + [vertices[i]]
        outer = [vertices[i]] + vertices[j:] + vertices[:i + 1]
        pieces = []
        for piece in (inner, outer):
            pieces.extend(self.cycle_components(graph, PerfectCycle(tuple(piece))))
        return pieces

    def fan_decomposition(self, graph: Graph, simplex: Simplex2) -> List[PerfectCycle]:
        """
        Perfect cycles around the centre cell whose sum carries the boundary of simplex

        The outline g h i f c b a d of the matrix is coned off from the
        centre e; repeated consecutive vertices are collapsed and pieces
        with fewer than two steps are dropped.
        """
        (a, b, c), (d, e, f), (g, h, i) = simplex
        outline = [g, h, i, f, c, b, a, d]
        pieces = []
        for x, y in zip(outline, outline[1:] + outline[:1]):
            walk = [e, x, y, e]
            collapsed = [walk[0]]
            for v in walk[1:]:
                if v != collapsed[-1]:
                    collapsed.append(v)
            if len(collapsed) >= 3:
                cycle = PerfectCycle(tuple(collapsed))
                self._check_walk(graph, cycle)
                pieces.append(cycle)
        return pieces
