"""
Net Service - typed cycles, edge-connectedness, nets, spanning sets and the
Hamiltonian-graph basis of H1
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import InvalidChordError
from app.core.int_linalg import HermiteLattice
from app.models.cycle import PerfectCycle
from app.models.graph import CircleForm, Edge, NetSubgraph
from app.models.homology import (
    BasisEntry,
    BasisSubgraph,
    CardinalityReport,
    H1Basis,
    Net,
    NetOutcome,
    SpanningSet,
    TypedCycle,
)
from app.services.cycle_service import canonical_walk
from app.services.graph_service import GraphService
from app.services.reduced_service import ReducedModelService, combine, walk_vector

logger = get_logger(__name__)

Pair = Tuple[Edge, Edge]


@dataclass
class TrivialCycleIndex:
    """Trivial vertex-simple cycles through at least two diagonals, with per-pair witnesses"""
    cycles: List[Tuple[Tuple[int, ...], FrozenSet[Edge], FrozenSet[Edge]]] = field(default_factory=list)
    witnesses: Dict[Pair, Tuple[int, ...]] = field(default_factory=dict)
    examined: int = 0


def oriented_walk(cycle: List[int], start: int, towards: int) -> Tuple[int, ...]:
    """Closed walk around a vertex-simple cycle leaving start along the step to towards"""
    i = cycle.index(start)
    rotated = cycle[i:] + cycle[:i]
    if rotated[1] != towards:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated) + (rotated[0],)


class NetService:
    """Service for net_basis operations"""

    def __init__(
        self,
        graphs: Optional[GraphService] = None,
        reduced: Optional[ReducedModelService] = None
    ):
        self.graphs = graphs or GraphService()
        self.reduced = reduced or ReducedModelService()
        self._indices = lru_cache(maxsize=settings.GRAPH_CACHE_SIZE)(self._build_index)

    def _cap(self, cf: CircleForm, cap: Optional[int]) -> Optional[int]:
        return settings.effective_cycle_cap(cf.n, cap)

    def _require_diagonal(self, cf: CircleForm, chord: Edge) -> Edge:
        chord = Edge.of(*chord)
        if chord not in self.graphs.diagonal_edges(cf):
            raise InvalidChordError(f"{chord} is not a diagonal edge", details={"chord": [chord.u, chord.v]})
        return chord

    # Typed cycles

    def typed_cycle(self, cf: CircleForm, chord: Edge, cycle_type: int) -> TypedCycle:
        """
        Canonical perfect cycle of the given type through a diagonal r < s

        Type 1: r s s+1 .. n 1 .. r      Type 2: r s s-1 .. r+1 r
        Type 3: s r r-1 .. 1 n .. s+1 s  Type 4: s r r+1 .. s-1 s

        Raises:
            InvalidChordError: If chord is not diagonal or the type is not 1..4
        """
        r, s = self._require_diagonal(cf, chord)
        n = cf.n
        if cycle_type == 1:
            walk = [r, s, *range(s + 1, n + 1), *range(1, r + 1)]
        elif cycle_type == 2:
            walk = [r, *range(s, r, -1), r]
        elif cycle_type == 3:
            walk = [s, *range(r, 0, -1), *range(n, s, -1), s]
        elif cycle_type == 4:
            walk = [s, *range(r, s), s]
        else:
            raise InvalidChordError("Cycle type must be 1, 2, 3 or 4", details={"cycle_type": cycle_type})
        return TypedCycle(Edge(r, s), cycle_type, PerfectCycle(tuple(walk)))

    def type_relations_check(self, cf: CircleForm, chord: Edge) -> bool:
        """
        Type 2 = Type 1 - Hamiltonian, Type 3 = -Type 1 and Type 4 = -Type 2,
        each up to the triangle lattice
        """
        vectors = {t: walk_vector(self.typed_cycle(cf, chord, t).walk.walk) for t in (1, 2, 3, 4)}
        ham = walk_vector(cf.hamiltonian_walk())
        differences = [
            combine((1, vectors[2]), (-1, vectors[1]), (1, ham)),
            combine((1, vectors[3]), (1, vectors[1])),
            combine((1, vectors[4]), (1, vectors[2])),
        ]
        return all(not d or self.reduced.is_trivial_reduced(cf.graph, d) for d in differences)

    # Edge-connectedness

    def trivial_cycle_index(self, cf: CircleForm, cap: Optional[int] = None) -> TrivialCycleIndex:
        """
        Enumerate vertex-simple cycles up to the length cap once, keep the
        trivial ones through two or more diagonals and record the witness
        for every diagonal pair they contain
        """
        return self._indices(cf, self._cap(cf, cap))

    def _build_index(self, cf: CircleForm, bound: Optional[int]) -> TrivialCycleIndex:
        diagonals = self.graphs.diagonal_edges(cf)
        index = TrivialCycleIndex()
        for cycle in nx.simple_cycles(cf.graph.to_networkx(), length_bound=bound):
            index.examined += 1
            if len(cycle) < 3:
                continue
            edges = frozenset(Edge.of(x, y) for x, y in zip(cycle, cycle[1:] + cycle[:1]))
            on_cycle = sorted(edges & diagonals)
            if len(on_cycle) < 2:
                continue
            canonical = canonical_walk(cycle)
            if not self.reduced.is_trivial_reduced(cf.graph, walk_vector(canonical)):
                continue
            index.cycles.append((canonical, edges, frozenset(on_cycle)))
            for first, second in combinations(on_cycle, 2):
                walk = oriented_walk(cycle, first.u, first.v)
                best = index.witnesses.get((first, second))
                if best is None or (len(walk), walk) < (len(best), best):
                    index.witnesses[(first, second)] = walk

        index.cycles.sort()
        logger.debug(
            f"Trivial cycle index: {index.examined} cycles examined, {len(index.cycles)} trivial "
            f"through two diagonals, {len(index.witnesses)} related pairs (cap {bound})"
        )
        return index

    def edge_connected(
        self,
        cf: CircleForm,
        e1: Edge,
        e2: Edge,
        cap: Optional[int] = None
    ) -> Optional[PerfectCycle]:
        """
        Shortest trivial vertex-simple cycle through both diagonals

        Ties are broken lexicographically on the walk written from the smaller
        endpoint of the smaller chord, leaving along that chord.

        Raises:
            InvalidChordError: If either edge is not diagonal or they coincide
        """
        first, second = sorted((self._require_diagonal(cf, e1), self._require_diagonal(cf, e2)))
        if first == second:
            raise InvalidChordError("Edge-connectedness needs two distinct diagonals", details={"chord": list(first)})
        walk = self.trivial_cycle_index(cf, cap).witnesses.get((first, second))
        return PerfectCycle(walk) if walk else None

    def relation_graph(self, cf: CircleForm, cap: Optional[int] = None) -> nx.Graph:
        relation = nx.Graph()
        relation.add_nodes_from(sorted(self.graphs.diagonal_edges(cf)))
        relation.add_edges_from(self.trivial_cycle_index(cf, cap).witnesses)
        return relation

    def nets(self, cf: CircleForm, cap: Optional[int] = None) -> List[Net]:
        """Maximal cliques of the edge-connectedness relation, sorted"""
        relation = self.relation_graph(cf, cap)
        found = sorted(tuple(sorted(clique)) for clique in nx.find_cliques(relation))
        logger.debug(f"Nets: {len(found)} over {relation.number_of_nodes()} diagonals")
        return [Net(edges) for edges in found]

    def net_subgraph(self, cf: CircleForm, net: Net, cap: Optional[int] = None) -> NetSubgraph:
        """Union of all trivial witness cycles through some pair of the net's diagonals"""
        members = set(net.edges)
        vertices = set()
        edges = set()
        for walk, cycle_edges, on_cycle in self.trivial_cycle_index(cf, cap).cycles:
            if len(on_cycle & members) >= 2:
                vertices.update(walk)
                edges.update(cycle_edges)
        return NetSubgraph(frozenset(vertices), frozenset(edges))

    # Spanning sets

    def spanning_set(self, cf: CircleForm, subgraph: NetSubgraph) -> SpanningSet:
        """
        Kruskal forest of s(G): rim edges weigh 0, diagonals 1, ties broken by endpoints

        An empty subgraph yields an empty spanning set.
        """
        forest = UnionFind(sorted(subgraph.vertices))
        chosen = []
        for edge in sorted(subgraph.edges, key=lambda e: (0 if cf.is_rim(e) else 1, e.u, e.v)):
            if forest[edge.u] != forest[edge.v]:
                forest.union(edge.u, edge.v)
                chosen.append(edge)
        tree = tuple(sorted(chosen))
        return SpanningSet(tree, tuple(e for e in tree if not cf.is_rim(e)))

    def basis_subgraph(self, spanning: SpanningSet) -> BasisSubgraph:
        return BasisSubgraph(spanning.chord_part)

    def cardinality_check(self, cf: CircleForm, subgraph: NetSubgraph, spanning: SpanningSet) -> CardinalityReport:
        """Spanning-set chord count against |V_s| - |rim edges of s| - 1"""
        if subgraph.is_empty:
            return CardinalityReport(None, None, None, None, note="empty subgraph skipped")
        rim = [e for e in subgraph.edges if cf.is_rim(e)]
        formula = len(subgraph.vertices) - len(rim) - 1
        actual = len(spanning.chord_part)
        rim_graph = nx.Graph()
        rim_graph.add_nodes_from(subgraph.vertices)
        rim_graph.add_edges_from(rim)
        acyclic = nx.is_forest(rim_graph)
        matches = formula == actual
        note = ""
        if not matches:
            note = "rim part of the subgraph contains a cycle" if not acyclic else "rim part is acyclic"
            logger.warning(f"Cardinality formula mismatch: formula {formula}, actual {actual} ({note})")
        return CardinalityReport(formula, actual, acyclic, matches, note)

    # Basis

    def h1_basis(
        self,
        cf: CircleForm,
        cycle_type: Optional[int] = None,
        cap: Optional[int] = None
    ) -> H1Basis:
        """
        Hamiltonian class plus the typed cycles of every net's spanning-set diagonals

        Trivial entries are moved to ``filtered_trivial``. Diagonals forming a
        singleton net with an empty subgraph are listed in ``isolated_chords``.

        Args:
            cf: Circle form
            cycle_type: 1..4 (defaults to DEFAULT_CYCLE_TYPE)
            cap: Witness length cap

        Returns:
            H1Basis
        """
        cycle_type = settings.DEFAULT_CYCLE_TYPE if cycle_type is None else cycle_type
        if cycle_type not in (1, 2, 3, 4):
            raise InvalidChordError("Cycle type must be 1, 2, 3 or 4", details={"cycle_type": cycle_type})

        ham = PerfectCycle(cf.hamiltonian_walk())
        ham_trivial = self.reduced.is_trivial_walk(cf.graph, ham)
        basis = H1Basis(includes_hamiltonian=not ham_trivial, hamiltonian_walk=ham, cycle_type=cycle_type)

        chords: List[Edge] = []
        for net in self.nets(cf, cap):
            subgraph = self.net_subgraph(cf, net, cap)
            if subgraph.is_empty:
                if len(net) == 1:
                    basis.isolated_chords.append(net.edges[0])
                basis.nets.append(NetOutcome(
                    net, subgraph.vertices, subgraph.edges, None,
                    self.cardinality_check(cf, subgraph, SpanningSet((), ()))
                ))
                continue
            spanning = self.spanning_set(cf, subgraph)
            basis.nets.append(NetOutcome(
                net, subgraph.vertices, subgraph.edges, spanning,
                self.cardinality_check(cf, subgraph, spanning)
            ))
            for chord in self.basis_subgraph(spanning).chords:
                if chord not in chords:
                    chords.append(chord)

        for chord in chords:
            typed = self.typed_cycle(cf, chord, cycle_type)
            entry = BasisEntry(chord, cycle_type, typed.walk)
            if self.reduced.is_trivial_walk(cf.graph, typed.walk):
                basis.filtered_trivial.append(entry)
            else:
                basis.chord_classes.append(entry)

        if ham_trivial:
            basis.notes.append("Hamiltonian class is trivial")
            if basis.chord_classes:
                basis.notes.append("trivial Hamiltonian class does not force H1 = 0 while chord classes survive")
        if basis.isolated_chords:
            basis.notes.append(
                "diagonals in singleton nets have an empty subgraph and contribute no class: "
                + ", ".join(str(e) for e in basis.isolated_chords)
            )
        logger.info(
            f"H1 basis: rank claim {basis.rank_claim} "
            f"({len(basis.chord_classes)} chord classes, {len(basis.filtered_trivial)} filtered)"
        )
        return basis

    # Audits

    def _lattice_with(self, cf: CircleForm, walks: List[Tuple[int, ...]]) -> HermiteLattice:
        graph = cf.graph
        lattice = HermiteLattice(len(graph.edges))
        lattice.add_all(self.reduced.triangle_matrix(graph).columns)
        for walk in walks:
            lattice.add(self.reduced.dense(graph, walk_vector(walk)))
        return lattice

    def _generates_cycle_space(self, cf: CircleForm, lattice: HermiteLattice) -> bool:
        return all(lattice.contains(column) for column in self.reduced.cycle_space(cf.graph).columns)

    def spanning_family_check(self, cf: CircleForm) -> bool:
        """Hamiltonian cycle plus all typed cycles generate cycles modulo triangles"""
        walks = [cf.hamiltonian_walk()]
        for chord in sorted(self.graphs.diagonal_edges(cf)):
            walks.extend(self.typed_cycle(cf, chord, t).walk.walk for t in (1, 2, 3, 4))
        return self._generates_cycle_space(cf, self._lattice_with(cf, walks))

    def net_soundness_check(self, cf: CircleForm, net: Net, cap: Optional[int] = None) -> List[PerfectCycle]:
        """Vertex-simple cycles of s(G) that are not trivial"""
        subgraph = self.net_subgraph(cf, net, cap)
        if subgraph.is_empty:
            return []
        host = nx.Graph()
        host.add_edges_from(sorted(subgraph.edges))
        offending = []
        for cycle in nx.simple_cycles(host, length_bound=self._cap(cf, cap)):
            if len(cycle) < 3:
                continue
            walk = PerfectCycle(canonical_walk(cycle))
            if not self.reduced.is_trivial_walk(cf.graph, walk):
                offending.append(walk)
        offending.sort(key=lambda c: (c.length, c.walk))
        if offending:
            logger.warning(f"Net {[str(e) for e in net.edges]}: {len(offending)} nontrivial cycles in its subgraph")
        return offending

    def basis_span_check(self, cf: CircleForm, basis: H1Basis) -> Tuple[bool, bool]:
        """
        Returns:
            (independent, generates): whether the surviving classes are
            independent modulo triangles and whether they generate all cycles
        """
        walks = [w.walk for w in basis.surviving_walks()]
        triangles = self._lattice_with(cf, [])
        combined = self._lattice_with(cf, walks)
        independent = combined.rank - triangles.rank == len(walks)
        return independent, self._generates_cycle_space(cf, combined)
