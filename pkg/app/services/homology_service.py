"""
Homology Service - H1 straight from the enumerated chain complex
"""
from functools import lru_cache
from typing import Dict, Optional

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import InvalidWalkError, NotACycleError
from app.core.int_linalg import HermiteLattice, IntMatrix, kernel_basis, quotient_invariants
from app.models.chain import BoundaryMatrices, Chain
from app.models.graph import Graph
from app.models.homology import HomologyGroup
from app.models.simplex import Simplex2
from app.services.chain_service import ChainService

logger = get_logger(__name__)


class HomologyService:
    """Service for the definitional route (homology_oracle)"""

    def __init__(self, chains: Optional[ChainService] = None):
        self.chains = chains or ChainService()
        # per-graph caches, bounded by GRAPH_CACHE_SIZE
        self._matrices = lru_cache(maxsize=settings.GRAPH_CACHE_SIZE)(self.chains.build_matrices)
        self._image_lattices = lru_cache(maxsize=settings.GRAPH_CACHE_SIZE)(self._build_image_lattice)

    def matrices(self, graph: Graph, budget: Optional[int] = None) -> BoundaryMatrices:
        budget = settings.MAX_SIMPLICES if budget is None else budget
        return self._matrices(graph, budget)

    def h1_definitional(self, graph: Graph, budget: Optional[int] = None) -> HomologyGroup:
        """
        H1 = ker d1 / im d2 over the integers

        Args:
            graph: Any reflexive graph (connectivity not assumed)
            budget: 2-simplex enumeration budget

        Returns:
            HomologyGroup

        Raises:
            EnumerationBudgetExceeded: When enumeration passes budget
        """
        m = self.matrices(graph, budget)
        cycles = kernel_basis(m.d1)
        rank, torsion = quotient_invariants(cycles, m.d2)
        group = HomologyGroup(rank, tuple(torsion))
        logger.info(f"H1 (definitional) on {graph.vertex_count} vertices: {group}")
        return group

    def _image_lattice(self, graph: Graph, budget: Optional[int]) -> HermiteLattice:
        budget = settings.MAX_SIMPLICES if budget is None else budget
        return self._image_lattices(graph, budget)

    def _build_image_lattice(self, graph: Graph, budget: int) -> HermiteLattice:
        d2 = self.matrices(graph, budget).d2
        lattice = HermiteLattice(d2.rows, track_certificates=True)
        for c, column in enumerate(d2.columns):
            lattice.add(column, label=c)
        return lattice

    def _vector(self, graph: Graph, chain: Chain, budget: Optional[int]) -> Dict[int, int]:
        reduced = self.chains.reduce_mod_degenerate(chain)
        if self.chains.boundary(reduced):
            raise NotACycleError("Chain has nonzero boundary", details={"chain": str(chain)})
        index = {s: i for i, s in enumerate(self.matrices(graph, budget).basis_1)}
        vector: Dict[int, int] = {}
        for simplex, coefficient in reduced:
            if simplex not in index:
                raise InvalidWalkError(
                    "Chain uses a simplex that is not a morphism into the graph",
                    details={"simplex": list(simplex)}
                )
            vector[index[simplex]] = coefficient
        return vector

    def is_trivial_definitional(self, graph: Graph, chain: Chain, budget: Optional[int] = None) -> bool:
        """
        Decide whether a 1-cycle lies in the image of d2

        Raises:
            NotACycleError: If the chain has nonzero boundary
            EnumerationBudgetExceeded: When enumeration passes budget
        """
        vector = self._vector(graph, chain, budget)
        return self._image_lattice(graph, budget).contains(vector)

    def certificate(self, graph: Graph, chain: Chain, budget: Optional[int] = None) -> Optional[Chain]:
        """A 2-chain whose boundary is the given cycle, or None when nontrivial"""
        vector = self._vector(graph, chain, budget)
        combination = self._image_lattice(graph, budget).certificate(vector)
        if combination is None:
            return None
        labels = self.matrices(graph, budget).d2_labels
        return Chain.of(2, ((labels[c], k) for c, k in combination.items()))
