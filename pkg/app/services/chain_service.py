"""
Chain Service - quotient chains and the differentials d1, d2
"""
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import EnumerationBudgetExceeded
from app.core.int_linalg import IntMatrix
from app.models.chain import BoundaryMatrices, Chain
from app.models.cycle import PerfectCycle
from app.models.graph import Graph
from app.models.simplex import FACE_INDICES, Simplex1, Simplex2
from app.services.cubical_service import CubicalService

logger = get_logger(__name__)


class ChainService:
    """Service for chain_alg operations"""

    def __init__(self, cubical: Optional[CubicalService] = None):
        self.cubical = cubical or CubicalService()

    def reduce_mod_degenerate(self, chain: Chain) -> Chain:
        """Drop degenerate basis terms (dimensions 1 and 2)"""
        if chain.dimension == 1:
            keep = {k: v for k, v in chain.coefficients.items() if not self.cubical.is_degenerate_1(k)}
        elif chain.dimension == 2:
            keep = {k: v for k, v in chain.coefficients.items() if not self.cubical.is_degenerate_2(k)}
        else:
            return chain
        return Chain(chain.dimension, keep)

    def boundary_2(self, simplex: Simplex2) -> Chain:
        """Signed sum of the four faces, reduced modulo degenerates"""
        terms = ((self.cubical.face(simplex, idx), idx.sign) for idx in FACE_INDICES)
        return self.reduce_mod_degenerate(Chain.of(1, terms))

    def boundary_1(self, simplex: Simplex1) -> Chain:
        """Endpoint difference c - a"""
        return Chain.of(0, [(simplex.c, 1), (simplex.a, -1)])

    def boundary(self, chain: Chain) -> Chain:
        """Linear extension of boundary_1 / boundary_2 to chains"""
        if chain.dimension == 2:
            total = Chain.zero(1)
            for simplex, coefficient in chain:
                total = total + coefficient * self.boundary_2(simplex)
            return total
        if chain.dimension == 1:
            total = Chain.zero(0)
            for simplex, coefficient in self.reduce_mod_degenerate(chain):
                total = total + coefficient * self.boundary_1(simplex)
            return total
        raise ValueError(f"No differential on dimension {chain.dimension}")

    def chain_of(self, cycle: PerfectCycle) -> Chain:
        return cycle.chain()

    def build_matrices(self, graph: Graph, budget: Optional[int] = None) -> BoundaryMatrices:
        """
        Assemble d1 and d2 for graph

        2-simplices are streamed; degenerate ones and zero boundaries are
        skipped, and each distinct boundary column is kept once with its
        multiplicity, which leaves the column lattice unchanged.

        Args:
            graph: Target graph
            budget: Maximum number of 2-simplices enumerated (defaults to MAX_SIMPLICES)

        Returns:
            BoundaryMatrices

        Raises:
            EnumerationBudgetExceeded: When enumeration passes budget
        """
        budget = settings.MAX_SIMPLICES if budget is None else budget

        basis_1 = [s for s in self.cubical.enumerate_simplices_1(graph) if not self.cubical.is_degenerate_1(s)]
        index_1: Dict[Simplex1, int] = {s: i for i, s in enumerate(basis_1)}

        d1_columns = []
        for s in basis_1:
            column = {}
            if s.a != s.c:
                column = {s.c - 1: 1, s.a - 1: -1}
            d1_columns.append(column)
        d1 = IntMatrix(rows=graph.vertex_count, cols=len(basis_1), columns=d1_columns)

        seen: Dict[FrozenSet[Tuple[int, int]], int] = {}
        d2_columns: List[Dict[int, int]] = []
        labels: List[Simplex2] = []
        multiplicity: List[int] = []
        total = nondegenerate = zeros = 0

        for simplex in self.cubical.iter_simplices_2(graph):
            total += 1
            if total > budget:
                raise EnumerationBudgetExceeded(budget, details={"vertex_count": graph.vertex_count})
            if self.cubical.is_degenerate_2(simplex):
                continue
            nondegenerate += 1

            column: Dict[int, int] = {}
            for idx in FACE_INDICES:
                face = self.cubical.face(simplex, idx)
                if face.a == face.b == face.c:
                    continue
                row = index_1[face]
                value = column.get(row, 0) + idx.sign
                if value:
                    column[row] = value
                else:
                    del column[row]
            if not column:
                zeros += 1
                continue

            key = frozenset(column.items())
            position = seen.get(key)
            if position is None:
                seen[key] = len(d2_columns)
                d2_columns.append(column)
                labels.append(simplex)
                multiplicity.append(1)
            else:
                multiplicity[position] += 1

        d2 = IntMatrix(rows=len(basis_1), cols=len(d2_columns), columns=d2_columns)
        logger.debug(
            f"Boundary matrices: {total} 2-simplices ({nondegenerate} nondegenerate, "
            f"{zeros} zero), d1 {d1.rows}x{d1.cols}, d2 {d2.rows}x{d2.cols}"
        )
        return BoundaryMatrices(
            d1=d1,
            d2=d2,
            basis_1=basis_1,
            d2_labels=labels,
            d2_multiplicity=multiplicity,
            simplices_2=total,
            nondegenerate_2=nondegenerate,
            zero_boundaries=zeros,
        )

    def dump_matrix(self, matrix: IntMatrix) -> str:
        """Coordinate-list text: a 'rows cols' header then 'row col value' lines"""
        lines = [f"{matrix.rows} {matrix.cols}"] + matrix.coordinate_lines()
        return "\n".join(lines) + "\n"

    def dump_matrices(self, matrices: BoundaryMatrices, directory: Path) -> List[Path]:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        for name, matrix in (("d1", matrices.d1), ("d2", matrices.d2)):
            path = directory / f"{name}.txt"
            path.write_text(self.dump_matrix(matrix), encoding="utf-8")
            written.append(path)
        logger.info(f"Boundary matrices written to {directory}")
        return written
