"""
Report Service - assembles command reports from the engines
"""
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator, Optional

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import EnumerationBudgetExceeded
from app.models.cycle import PerfectCycle
from app.models.graph import CircleForm, Graph
from app.models.homology import H1Basis
from app.schemas.report import (
    BasisEntryInfo,
    BasisInfo,
    CardinalityInfo,
    EngineVerdict,
    GraphInfo,
    H1Report,
    HomologyInfo,
    NetInfo,
    TrivialityReport,
    WitnessInfo,
)
from app.services.chain_service import ChainService
from app.services.cycle_service import CycleService
from app.services.graph_service import GraphService
from app.services.homology_service import HomologyService
from app.services.net_service import NetService
from app.services.reduced_service import ReducedModelService
from app.utils.render import simplex_inline
from app.utils.walk_notation import edge_pairs, parse_perfect_cycle

logger = get_logger(__name__)


class ReportService:
    """Service building h1 and check-trivial reports"""

    def __init__(self, timings: Optional[bool] = None):
        self.graphs = GraphService()
        self.chains = ChainService()
        self.cycles = CycleService(self.chains)
        self.homology = HomologyService(self.chains)
        self.reduced = ReducedModelService()
        self.nets = NetService(self.graphs, self.reduced)
        self.record_timings = settings.REPORT_TIMINGS if timings is None else timings
        self._timings: Dict[str, float] = {}

    @contextmanager
    def _phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self._timings[name] = round(time.perf_counter() - start, 6)

    def _collected_timings(self) -> Optional[Dict[str, float]]:
        timings = dict(self._timings) if self.record_timings else None
        self._timings.clear()
        return timings

    def graph_info(self, graph: Graph, cf: Optional[CircleForm] = None) -> GraphInfo:
        return GraphInfo(
            vertex_count=graph.vertex_count,
            edges=edge_pairs(graph.edges),
            hamiltonian_order=list(cf.hamiltonian_order) if cf else None,
            diagonals=edge_pairs(self.graphs.diagonal_edges(cf)) if cf else [],
        )

    def basis_info(self, cf: CircleForm, basis: H1Basis, cap: Optional[int] = None) -> BasisInfo:
        nets = []
        for outcome in basis.nets:
            spanning = outcome.spanning_set
            offending = self.nets.net_soundness_check(cf, outcome.net, cap) if spanning else []
            nets.append(NetInfo(
                edges=edge_pairs(outcome.net.edges),
                subgraph_vertices=sorted(outcome.subgraph_vertices),
                subgraph_edges=edge_pairs(outcome.subgraph_edges),
                spanning_tree=edge_pairs(spanning.tree_edges) if spanning else None,
                chord_part=edge_pairs(spanning.chord_part) if spanning else [],
                cardinality=CardinalityInfo(
                    formula=outcome.cardinality.formula_value,
                    actual=outcome.cardinality.actual,
                    rim_acyclic=outcome.cardinality.rim_acyclic,
                    matches=outcome.cardinality.matches,
                    note=outcome.cardinality.note,
                ),
                nontrivial_cycles=[str(c) for c in offending],
            ))

        index = self.nets.trivial_cycle_index(cf, cap)
        witnesses = [
            WitnessInfo(pair=[list(first), list(second)], walk=PerfectCycle(walk).notation())
            for (first, second), walk in sorted(index.witnesses.items())
        ]
        independent, generates = self.nets.basis_span_check(cf, basis)

        def entries(items):
            return [BasisEntryInfo(chord=list(e.chord), cycle_type=e.cycle_type, walk=str(e.walk)) for e in items]

        return BasisInfo(
            cycle_type=basis.cycle_type,
            hamiltonian_walk=str(basis.hamiltonian_walk),
            includes_hamiltonian=basis.includes_hamiltonian,
            rank_claim=basis.rank_claim,
            chord_classes=entries(basis.chord_classes),
            filtered_trivial=entries(basis.filtered_trivial),
            isolated_chords=edge_pairs(basis.isolated_chords),
            nets=nets,
            witnesses=witnesses,
            independent=independent,
            generates=generates,
            notes=list(basis.notes),
        )

    def h1_report(
        self,
        graph: Graph,
        method: str,
        budget: Optional[int] = None,
        cap: Optional[int] = None,
        cycle_type: Optional[int] = None,
        dump_dir: Optional[Path] = None
    ) -> H1Report:
        """
        Run one engine and report

        The basis and definitional methods are cross-checked against the
        reduced model; disagreements land in ``discrepancies``.

        Raises:
            EnumerationBudgetExceeded: Definitional method over budget
            NotHamiltonianError: Basis method on a non-Hamiltonian graph
        """
        if method == "definitional":
            with self._phase("definitional"):
                matrices = self.homology.matrices(graph, budget)
                group = self.homology.h1_definitional(graph, budget)
            if dump_dir is not None:
                self.chains.dump_matrices(matrices, dump_dir)
            report = H1Report(
                method=method,
                graph=self.graph_info(graph),
                homology=HomologyInfo(rank=group.rank, torsion=list(group.torsion)),
                simplices_2=matrices.simplices_2,
                d2_columns=matrices.d2.cols,
            )
            with self._phase("reduced"):
                reduced = self.reduced.h1_reduced(graph)
            if reduced != group:
                report.discrepancies.append(f"reduced model gives {reduced}, definitional gives {group}")
        elif method == "reduced":
            with self._phase("reduced"):
                group = self.reduced.h1_reduced(graph)
            report = H1Report(
                method=method,
                graph=self.graph_info(graph),
                homology=HomologyInfo(rank=group.rank, torsion=list(group.torsion)),
            )
        else:
            cf = self.graphs.circle_form(graph)
            with self._phase("basis"):
                basis = self.nets.h1_basis(cf, cycle_type, cap)
                info = self.basis_info(cf, basis, cap)
            with self._phase("reduced"):
                reduced = self.reduced.h1_reduced(graph)
            report = H1Report(
                method="basis",
                graph=self.graph_info(graph, cf),
                homology=HomologyInfo(rank=basis.rank_claim),
                basis=info,
            )
            if basis.rank_claim != reduced.rank:
                report.discrepancies.append(
                    f"basis rank claim {basis.rank_claim} differs from reduced rank {reduced.rank}"
                )
            if reduced.torsion:
                report.discrepancies.append(f"reduced model finds torsion {list(reduced.torsion)}")
            span_note = self._span_note(info)
            if span_note:
                report.discrepancies.append(span_note)

        for line in report.discrepancies:
            logger.warning(f"Discrepancy: {line}")
        report.timings = self._collected_timings()
        return report

    @staticmethod
    def _span_note(info: BasisInfo) -> Optional[str]:
        if info.independent and info.generates:
            return None
        return f"surviving classes independent={info.independent}, generating={info.generates}"

    def triviality_report(self, graph: Graph, walk_text: str, budget: Optional[int] = None) -> TrivialityReport:
        """
        Verdicts of both engines on one closed walk

        Raises:
            InvalidWalkError: If the walk is malformed or leaves the graph
        """
        cycle = parse_perfect_cycle(walk_text)
        with self._phase("reduced"):
            vector = self.reduced.to_edge_vector(graph, cycle)
            triangles = self.reduced.certificate(graph, vector)
        reduced = EngineVerdict(
            trivial=triangles is not None,
            certificate=[f"{k:+d} {PerfectCycle((a, b, c, a))}" for (a, b, c), k in (triangles or [])],
        )

        try:
            with self._phase("definitional"):
                chain = self.chains.chain_of(cycle)
                bounding = self.homology.certificate(graph, chain, budget)
            definitional = EngineVerdict(
                trivial=bounding is not None,
                certificate=[f"{k:+d} {simplex_inline(s)}" for s, k in (bounding or [])],
            )
        except EnumerationBudgetExceeded as exc:
            definitional = EngineVerdict(skipped=exc.reason)

        agree = None if definitional.trivial is None else definitional.trivial == reduced.trivial
        if agree is False:
            logger.warning(f"Engines disagree on {cycle}: reduced {reduced.trivial}, definitional {definitional.trivial}")
        return TrivialityReport(
            graph=self.graph_info(graph),
            walk=str(cycle),
            reduced=reduced,
            definitional=definitional,
            agree=agree,
            timings=self._collected_timings(),
        )
