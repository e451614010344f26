"""
Homology and Net Models - results of the H1 engines and the basis pipeline
"""
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from app.models.cycle import PerfectCycle
from app.models.graph import Edge


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank plus torsion invariant factors"""
    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        factors = tuple(sorted(int(d) for d in self.torsion if d > 1))
        for small, large in zip(factors, factors[1:]):
            if large % small:
                raise ValueError(f"Torsion factors {factors} do not form a divisibility chain")
        object.__setattr__(self, "torsion", factors)

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TypedCycle:
    """One of the four canonical perfect cycles attached to a diagonal edge"""
    chord: Edge
    cycle_type: int
    walk: PerfectCycle


@dataclass(frozen=True)
class Net:
    """Maximal pairwise edge-connected set of diagonal edges"""
    edges: Tuple[Edge, ...]

    def __contains__(self, edge: Edge) -> bool:
        return edge in self.edges

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SpanningSet:
    """Minimum spanning forest of a net subgraph and its diagonal part"""
    tree_edges: Tuple[Edge, ...]
    chord_part: Tuple[Edge, ...]


@dataclass(frozen=True)
class BasisSubgraph:
    """Spanning-set edges that remain after deleting the rim"""
    chords: Tuple[Edge, ...]


@dataclass(frozen=True)
class CardinalityReport:
    """Spanning-set size against |V_s| - |E_s on rim| - 1"""
    formula_value: Optional[int]
    actual: Optional[int]
    rim_acyclic: Optional[bool]
    matches: Optional[bool]
    note: str = ""


@dataclass(frozen=True)
class BasisEntry:
    chord: Edge
    cycle_type: int
    walk: PerfectCycle


@dataclass
class NetOutcome:
    """Per-net intermediate results of the basis pipeline"""
    net: Net
    subgraph_vertices: FrozenSet[int]
    subgraph_edges: FrozenSet[Edge]
    spanning_set: Optional[SpanningSet]
    cardinality: CardinalityReport


@dataclass
class H1Basis:
    """Candidate basis of H1: Hamiltonian class plus surviving chord classes"""
    includes_hamiltonian: bool
    hamiltonian_walk: PerfectCycle
    chord_classes: List[BasisEntry] = field(default_factory=list)
    filtered_trivial: List[BasisEntry] = field(default_factory=list)
    nets: List[NetOutcome] = field(default_factory=list)
    isolated_chords: List[Edge] = field(default_factory=list)
    cycle_type: int = 1
    notes: List[str] = field(default_factory=list)

    @property
    def rank_claim(self) -> int:
        return len(self.chord_classes) + (1 if self.includes_hamiltonian else 0)

    def surviving_walks(self) -> List[PerfectCycle]:
        walks = [self.hamiltonian_walk] if self.includes_hamiltonian else []
        return walks + [entry.walk for entry in self.chord_classes]
