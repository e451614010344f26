"""
Graph Repository - edge-list documents, named fixtures and graph generators
"""
import itertools
import random
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

import networkx as nx

from atams.logging import get_logger

from app.core.exceptions import GraphParseError
from app.models.graph import Graph, complete_graph, cycle_graph, graph_from_edges

logger = get_logger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parents[2] / "fixtures"

# Eight-vertex circle form: rim 1..8 plus the chords of the two-net example
PINCHED_CHORDS: Tuple[Tuple[int, int], ...] = (
    (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (1, 6), (1, 7)
)


def _pinched_graph() -> Graph:
    rim = [(i, i % 8 + 1) for i in range(1, 9)]
    return graph_from_edges(8, rim + list(PINCHED_CHORDS), tuple(range(1, 9)))


class GraphRepository:
    """Reads, writes and generates graphs"""

    FIXTURES = {
        "c4": lambda: cycle_graph(4),
        "k4": lambda: complete_graph(4),
        "k5": lambda: complete_graph(5),
        "pinched": _pinched_graph,
        "path3": lambda: graph_from_edges(3, [(1, 2), (2, 3)]),
    }

    def parse_graph(self, text: str) -> Graph:
        """
        Parse an edge-list document

        Line 1 is the vertex count, then one "u v" edge per line, optionally
        one "H: v1 ... vn" line pinning a Hamiltonian cycle. '#' starts a comment.

        Args:
            text: Document contents

        Returns:
            Graph with the listed edges, duplicates collapsed

        Raises:
            GraphParseError: On malformed lines, out-of-range vertices or self-loops
        """
        vertex_count: Optional[int] = None
        pairs: List[Tuple[int, int]] = []
        hint: Optional[Tuple[int, ...]] = None

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue

            if vertex_count is None:
                vertex_count = self._parse_count(line, lineno)
                continue

            if line.upper().startswith("H:"):
                if hint is not None:
                    raise GraphParseError("Hamiltonian cycle pinned twice", details={"line": lineno})
                hint = self._parse_hint(line[2:], vertex_count, lineno)
                continue

            fields = line.split()
            if len(fields) != 2 or not all(f.lstrip("-").isdigit() for f in fields):
                raise GraphParseError("Malformed edge line", details={"line": lineno, "text": raw})
            u, v = int(fields[0]), int(fields[1])
            for x in (u, v):
                if not 1 <= x <= vertex_count:
                    raise GraphParseError(
                        f"Vertex {x} outside 1..{vertex_count}",
                        details={"line": lineno, "vertex": x}
                    )
            if u == v:
                raise GraphParseError(
                    "Self-loops are implicit and must not be listed",
                    details={"line": lineno, "vertex": u}
                )
            pairs.append((u, v))

        if vertex_count is None:
            raise GraphParseError("Document has no vertex count")

        graph = graph_from_edges(vertex_count, pairs, hint)
        logger.debug(f"Parsed graph: {vertex_count} vertices, {len(graph.edges)} edges")
        return graph

    @staticmethod
    def _parse_count(line: str, lineno: int) -> int:
        if not line.isdigit() or int(line) < 1:
            raise GraphParseError("First line must be a positive vertex count", details={"line": lineno, "text": line})
        return int(line)

    @staticmethod
    def _parse_hint(body: str, vertex_count: int, lineno: int) -> Tuple[int, ...]:
        fields = body.replace(",", " ").split()
        if not fields or not all(f.isdigit() for f in fields):
            raise GraphParseError("Malformed Hamiltonian line", details={"line": lineno})
        order = tuple(int(f) for f in fields)
        if len(order) == vertex_count + 1 and order[0] == order[-1]:
            order = order[:-1]
        if sorted(order) != list(range(1, vertex_count + 1)):
            raise GraphParseError(
                "Hamiltonian line must list every vertex exactly once",
                details={"line": lineno, "order": list(order)}
            )
        return order

    def format_graph(self, graph: Graph) -> str:
        """Inverse of parse_graph"""
        lines = [str(graph.vertex_count)]
        lines.extend(f"{e.u} {e.v}" for e in graph.sorted_edges)
        if graph.hamiltonian_hint:
            lines.append("H: " + " ".join(str(v) for v in graph.hamiltonian_hint))
        return "\n".join(lines) + "\n"

    def load_graph(self, path: Path) -> Graph:
        """
        Load a graph document from disk

        Raises:
            GraphParseError: If the file is missing or malformed
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise GraphParseError(f"Cannot read graph file: {exc}", details={"path": str(path)})
        graph = self.parse_graph(text)
        logger.info(f"Graph loaded: {path.name} ({graph.vertex_count} vertices, {len(graph.edges)} edges)")
        return graph

    def fixture(self, name: str) -> Graph:
        try:
            return self.FIXTURES[name]()
        except KeyError:
            raise GraphParseError(f"Unknown fixture '{name}'", details={"known": sorted(self.FIXTURES)})

    def fixture_path(self, name: str) -> Path:
        return FIXTURE_DIR / f"{name}.g"

    def connected_graphs(self, max_n: int) -> Iterator[Graph]:
        """
        All connected graphs on 1..max_n vertices up to isomorphism

        Drawn from the networkx graph atlas, which covers up to 7 vertices.
        """
        if max_n > 7:
            raise ValueError("The graph atlas only covers graphs with at most 7 vertices")
        for atlas_graph in nx.graph_atlas_g():
            n = atlas_graph.number_of_nodes()
            if n == 0 or n > max_n or not nx.is_connected(atlas_graph):
                continue
            yield graph_from_edges(n, ((u + 1, v + 1) for u, v in atlas_graph.edges()))

    def random_connected_graph(self, n: int, rng: random.Random, p: float = 0.5) -> Graph:
        """Random spanning tree on 1..n plus every other pair with probability p"""
        pairs = {(rng.randint(1, v - 1), v) for v in range(2, n + 1)}
        for u, v in itertools.combinations(range(1, n + 1), 2):
            if (u, v) not in pairs and rng.random() < p:
                pairs.add((u, v))
        return graph_from_edges(n, sorted(pairs))

    def random_hamiltonian_graph(self, n: int, rng: random.Random, p: float = 0.5) -> Graph:
        """Rim 1..n plus each diagonal pair with probability p; the rim is pinned"""
        chords = [pair for pair in _diagonal_pairs(n) if rng.random() < p]
        return self._hamiltonian(n, chords)

    def hamiltonian_chord_subsets(self, n: int) -> Iterator[Graph]:
        """Rim 1..n with every subset of the diagonal pairs, smallest subsets first"""
        diagonals = _diagonal_pairs(n)
        for size in range(len(diagonals) + 1):
            for chords in itertools.combinations(diagonals, size):
                yield self._hamiltonian(n, list(chords))

    @staticmethod
    def _hamiltonian(n: int, chords: List[Tuple[int, int]]) -> Graph:
        rim = [(i, i % n + 1) for i in range(1, n + 1)]
        return graph_from_edges(n, rim + chords, tuple(range(1, n + 1)))


def _diagonal_pairs(n: int) -> List[Tuple[int, int]]:
    return [
        (u, v) for u, v in itertools.combinations(range(1, n + 1), 2)
        if v - u not in (1, n - 1)
    ]
