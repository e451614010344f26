"""
Report Schemas - DTOs for command output
"""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings


# Building blocks
class GraphInfo(BaseModel):
    """Schema for the analysed graph"""
    vertex_count: int = Field(..., description="Number of vertices")
    edges: List[List[int]] = Field(..., description="Edges [u, v] with u < v, sorted")
    hamiltonian_order: Optional[List[int]] = Field(None, description="Original labels in circle-form order")
    diagonals: List[List[int]] = Field(default_factory=list, description="Chords of the circle form (circle-form labels)")


class HomologyInfo(BaseModel):
    """Schema for an H1 result"""
    rank: int = Field(..., ge=0, description="Free rank")
    torsion: List[int] = Field(default_factory=list, description="Invariant factors greater than one")


class BasisEntryInfo(BaseModel):
    """Schema for one chord class of the basis"""
    chord: List[int] = Field(..., description="Diagonal [r, s]")
    cycle_type: int = Field(..., ge=1, le=4, description="Typed cycle used")
    walk: str = Field(..., description="Representative walk, compressed notation")


class CardinalityInfo(BaseModel):
    """Schema for the spanning-set cardinality audit"""
    formula: Optional[int] = Field(None, description="|V_s| - |rim edges of s| - 1")
    actual: Optional[int] = Field(None, description="Diagonals in the spanning set")
    rim_acyclic: Optional[bool] = Field(None, description="Rim part of the subgraph is a forest")
    matches: Optional[bool] = Field(None, description="Formula equals actual")
    note: str = Field("", description="Explanation when skipped or mismatched")


class NetInfo(BaseModel):
    """Schema for one net and its spanning data"""
    edges: List[List[int]] = Field(..., description="Diagonals of the net")
    subgraph_vertices: List[int] = Field(default_factory=list)
    subgraph_edges: List[List[int]] = Field(default_factory=list)
    spanning_tree: Optional[List[List[int]]] = Field(None, description="Kruskal forest of the subgraph")
    chord_part: List[List[int]] = Field(default_factory=list, description="Diagonals of the spanning forest")
    cardinality: CardinalityInfo
    nontrivial_cycles: List[str] = Field(default_factory=list, description="Cycles of the subgraph testing nontrivial")


class WitnessInfo(BaseModel):
    """Schema for an edge-connectedness witness"""
    pair: List[List[int]] = Field(..., description="Two diagonals")
    walk: str = Field(..., description="Trivial cycle through both")


class BasisInfo(BaseModel):
    """Schema for the Hamiltonian-graph basis"""
    cycle_type: int
    hamiltonian_walk: str
    includes_hamiltonian: bool
    rank_claim: int
    chord_classes: List[BasisEntryInfo] = Field(default_factory=list)
    filtered_trivial: List[BasisEntryInfo] = Field(default_factory=list)
    isolated_chords: List[List[int]] = Field(default_factory=list)
    nets: List[NetInfo] = Field(default_factory=list)
    witnesses: List[WitnessInfo] = Field(default_factory=list)
    independent: Optional[bool] = Field(None, description="Surviving classes independent modulo triangles")
    generates: Optional[bool] = Field(None, description="Surviving classes generate the cycle lattice modulo triangles")
    notes: List[str] = Field(default_factory=list)


# Reports
class ReportBase(BaseModel):
    """Common header of every report"""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(settings.REPORT_SCHEMA_VERSION, alias="schema", description="Report schema version")
    app_version: str = Field(settings.APP_VERSION)
    timings: Optional[Dict[str, float]] = Field(None, description="Wall-clock seconds per phase (opt-in)")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


class H1Report(ReportBase):
    """Schema for the h1 command"""
    command: Literal["h1"] = "h1"
    method: Literal["definitional", "reduced", "basis"]
    graph: GraphInfo
    homology: Optional[HomologyInfo] = None
    basis: Optional[BasisInfo] = None
    simplices_2: Optional[int] = Field(None, description="2-simplices enumerated (definitional)")
    d2_columns: Optional[int] = Field(None, description="Distinct nonzero boundary columns (definitional)")
    discrepancies: List[str] = Field(default_factory=list)


class EngineVerdict(BaseModel):
    """Schema for one engine's triviality verdict"""
    trivial: Optional[bool] = Field(None, description="None when the engine was skipped")
    certificate: List[str] = Field(default_factory=list, description="Terms of a bounding combination")
    skipped: Optional[str] = Field(None, description="Reason the engine did not run")


class TrivialityReport(ReportBase):
    """Schema for the check-trivial command"""
    command: Literal["check-trivial"] = "check-trivial"
    graph: GraphInfo
    walk: str
    reduced: EngineVerdict
    definitional: EngineVerdict
    agree: Optional[bool] = Field(None, description="Both engines ran and agree")


class ComparisonEntry(BaseModel):
    """Schema for one graph of a comparison or corpus run"""
    id: int
    vertex_count: int
    chords: List[List[int]] = Field(default_factory=list)
    hamiltonian: bool = True
    reduced: Optional[HomologyInfo] = None
    definitional: Optional[HomologyInfo] = None
    definitional_skipped: Optional[str] = None
    basis_rank: Optional[int] = None
    isolated_chords: List[List[int]] = Field(default_factory=list)
    span_independent: Optional[bool] = None
    span_generates: Optional[bool] = None
    torsion_found: bool = False
    ranks_agree: bool = True
    notes: List[str] = Field(default_factory=list)


class CorpusSummary(BaseModel):
    """Schema for corpus aggregates"""
    graphs: int = 0
    definitional_checked: int = 0
    torsion_graphs: List[int] = Field(default_factory=list)
    rank_disagreements: List[int] = Field(default_factory=list)
    engine_disagreements: List[int] = Field(default_factory=list)


class CorpusReport(ReportBase):
    """Schema for the corpus command"""
    command: Literal["corpus"] = "corpus"
    seed: int
    n_max: int
    count: int
    exhaustive: bool = False
    entries: List[ComparisonEntry] = Field(default_factory=list)
    summary: CorpusSummary = Field(default_factory=CorpusSummary)
