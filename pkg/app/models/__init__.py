from app.models.graph import (
    Edge,
    Graph,
    CircleForm,
    NetSubgraph,
    graph_from_edges,
    cycle_graph,
    complete_graph,
)
from app.models.simplex import Simplex1, Simplex2, FaceIndex, FACE_INDICES
from app.models.chain import Chain
from app.models.cycle import EdgeStep, PerfectCycle, ProperCycle
from app.models.homology import (
    HomologyGroup,
    TypedCycle,
    Net,
    SpanningSet,
    BasisSubgraph,
    CardinalityReport,
    BasisEntry,
    NetOutcome,
    H1Basis,
)

__all__ = [
    "Edge", "Graph", "CircleForm", "NetSubgraph",
    "graph_from_edges", "cycle_graph", "complete_graph",
    "Simplex1", "Simplex2", "FaceIndex", "FACE_INDICES",
    "Chain",
    "EdgeStep", "PerfectCycle", "ProperCycle",
    "HomologyGroup", "TypedCycle", "Net", "SpanningSet", "BasisSubgraph",
    "CardinalityReport", "BasisEntry", "NetOutcome", "H1Basis",
]
