"""
Cubical Service - singular 1- and 2-simplices, faces, degeneracy and rotations
"""
from typing import Iterator, List, Optional, Tuple

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import EnumerationBudgetExceeded
from app.models.graph import Graph
from app.models.simplex import FaceIndex, Simplex1, Simplex2

logger = get_logger(__name__)


def _anchors(index: int) -> Tuple[int, ...]:
    """Already-placed cells (row-major) at king distance 1 from cell index"""
    r, c = divmod(index, 3)
    placed = []
    if c > 0:
        placed.append(3 * r + c - 1)
    if r > 0:
        for dc in (-1, 0, 1):
            if 0 <= c + dc < 3:
                placed.append(3 * (r - 1) + c + dc)
    return tuple(placed)


ANCHORS: Tuple[Tuple[int, ...], ...] = tuple(_anchors(i) for i in range(9))

KING_PAIRS: Tuple[Tuple[int, int], ...] = tuple(
    (a, i) for i in range(9) for a in ANCHORS[i]
)


class CubicalService:
    """Service for the cubical singular simplices of a reflexive graph"""

    def enumerate_simplices_1(self, graph: Graph) -> List[Simplex1]:
        """All morphisms of the 3-vertex path into graph, lexicographic"""
        closed = graph.closed_neighbors
        return [
            Simplex1(a, b, c)
            for a in graph.vertices
            for b in closed[a]
            for c in closed[b]
        ]

    def iter_simplices_2(self, graph: Graph) -> Iterator[Simplex2]:
        """
        Stream all valid 3x3 matrices in lexicographic row-major order

        Cells are filled row by row; each new cell is drawn from the closed
        neighborhood of its left neighbor (or upper neighbor) and filtered by
        the remaining placed king neighbors.
        """
        closed = graph.closed_neighbors
        closed_sets = {v: frozenset(ns) for v, ns in closed.items()}
        vertices = tuple(graph.vertices)
        cells = [0] * 9

        def extend(index: int) -> Iterator[Simplex2]:
            if index == 9:
                yield Simplex2(tuple(cells[0:3]), tuple(cells[3:6]), tuple(cells[6:9]))
                return
            anchors = ANCHORS[index]
            if not anchors:
                candidates = vertices
            else:
                first = closed[cells[anchors[0]]]
                others = [closed_sets[cells[a]] for a in anchors[1:]]
                candidates = [v for v in first if all(v in s for s in others)]
            for v in candidates:
                cells[index] = v
                yield from extend(index + 1)

        yield from extend(0)

    def enumerate_simplices_2(self, graph: Graph, budget: Optional[int] = None) -> List[Simplex2]:
        """
        All morphisms of the square of the 3-vertex path into graph

        Args:
            graph: Target graph
            budget: Maximum number of simplices (defaults to MAX_SIMPLICES)

        Returns:
            Lexicographically ordered list, degenerate ones included

        Raises:
            EnumerationBudgetExceeded: When the count would exceed budget
        """
        budget = settings.MAX_SIMPLICES if budget is None else budget
        result: List[Simplex2] = []
        for simplex in self.iter_simplices_2(graph):
            if len(result) >= budget:
                raise EnumerationBudgetExceeded(budget, details={"vertex_count": graph.vertex_count})
            result.append(simplex)
        logger.debug(f"Enumerated {len(result)} 2-simplices on {graph.vertex_count} vertices")
        return result

    def face(self, simplex: Simplex2, index: FaceIndex) -> Simplex1:
        """
        Restriction to one side of the square

        (1, 0) left column and (1, 1) right column are read bottom to top;
        (2, 0) bottom row and (2, 1) top row are read left to right.
        """
        top, middle, bottom = simplex
        if index.j == 1:
            col = 2 * index.k
            return Simplex1(bottom[col], middle[col], top[col])
        row = top if index.k else bottom
        return Simplex1(*row)

    def is_degenerate_1(self, simplex: Simplex1) -> bool:
        return simplex.a == simplex.b == simplex.c

    def is_degenerate_2(self, simplex: Simplex2) -> bool:
        """Factors through a projection: every row constant, or all rows equal"""
        rows_constant = all(row[0] == row[1] == row[2] for row in simplex)
        rows_equal = simplex.top == simplex.middle == simplex.bottom
        return rows_constant or rows_equal

    def rotations(self, simplex: Simplex2) -> List[Simplex2]:
        """The matrix and its three quarter-turn rotations"""
        result = [simplex]
        current = simplex
        for _ in range(3):
            top, middle, bottom = current
            current = Simplex2(
                (top[2], middle[2], bottom[2]),
                (top[1], middle[1], bottom[1]),
                (top[0], middle[0], bottom[0]),
            )
            result.append(current)
        return result

    def is_valid_simplex_1(self, graph: Graph, simplex: Simplex1) -> bool:
        if not all(v in graph.vertices for v in simplex):
            return False
        return graph.adjacent(simplex.a, simplex.b) and graph.adjacent(simplex.b, simplex.c)

    def is_valid_simplex_2(self, graph: Graph, simplex: Simplex2) -> bool:
        cells = simplex.cells
        if not all(v in graph.vertices for v in cells):
            return False
        return all(graph.adjacent(cells[a], cells[b]) for a, b in KING_PAIRS)
