"""
Comparison Service - cross-checks of the three H1 routes and corpus screening
"""
import random
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from atams.logging import get_logger

from app.core.config import settings
from app.core.exceptions import CorpusParameterError, EnumerationBudgetExceeded, NotHamiltonianError
from app.models.graph import Graph
from app.repositories.graph_repository import GraphRepository
from app.schemas.report import ComparisonEntry, CorpusReport, CorpusSummary, HomologyInfo
from app.services.graph_service import GraphService
from app.services.homology_service import HomologyService
from app.services.net_service import NetService
from app.services.reduced_service import ReducedModelService
from app.utils.walk_notation import edge_pairs

logger = get_logger(__name__)

Job = Tuple[int, int, Tuple[Tuple[int, int], ...], Optional[Tuple[int, ...]], int, Optional[int], int, bool]


def _homology_info(group) -> HomologyInfo:
    return HomologyInfo(rank=group.rank, torsion=list(group.torsion))


class ComparisonService:
    """Service for oracle comparison and corpus runs"""

    def __init__(self):
        self.repository = GraphRepository()
        self.graphs = GraphService()
        self.reduced = ReducedModelService()
        self.homology = HomologyService()
        self.nets = NetService(self.graphs, self.reduced)

    def compare_with_oracle(
        self,
        graph: Graph,
        budget: Optional[int] = None,
        cap: Optional[int] = None,
        cycle_type: Optional[int] = None,
        with_oracle: bool = True,
        entry_id: int = 0
    ) -> ComparisonEntry:
        """
        Run the basis pipeline, the reduced model and (budget permitting) the
        definitional oracle on one graph

        Discrepancies and torsion are report content; nothing is raised for them.

        Args:
            graph: Hamiltonian graph
            budget: 2-simplex budget for the definitional oracle
            cap: Witness length cap
            cycle_type: Typed cycle used by the basis
            with_oracle: Run the definitional oracle at all
            entry_id: Identifier carried into the entry

        Returns:
            ComparisonEntry

        Raises:
            NotHamiltonianError: If graph has no Hamiltonian cycle
        """
        cf = self.graphs.circle_form(graph)
        entry = ComparisonEntry(
            id=entry_id,
            vertex_count=graph.vertex_count,
            chords=edge_pairs(self.graphs.diagonal_edges(cf)),
        )

        basis = self.nets.h1_basis(cf, cycle_type, cap)
        entry.basis_rank = basis.rank_claim
        entry.isolated_chords = edge_pairs(basis.isolated_chords)
        entry.span_independent, entry.span_generates = self.nets.basis_span_check(cf, basis)
        entry.notes.extend(basis.notes)

        reduced = self.reduced.h1_reduced(graph)
        entry.reduced = _homology_info(reduced)

        definitional = None
        if with_oracle:
            try:
                definitional = self.homology.h1_definitional(graph, budget)
                entry.definitional = _homology_info(definitional)
            except EnumerationBudgetExceeded as exc:
                entry.definitional_skipped = exc.reason
                logger.debug(f"Graph {entry_id}: definitional oracle skipped ({exc.reason})")
        else:
            entry.definitional_skipped = "oracle not requested"

        entry.torsion_found = bool(reduced.torsion) or bool(definitional and definitional.torsion)
        entry.ranks_agree = basis.rank_claim == reduced.rank
        if definitional is not None and definitional != reduced:
            entry.notes.append(f"engines disagree: reduced {reduced}, definitional {definitional}")
            logger.warning(f"Graph {entry_id}: reduced {reduced} vs definitional {definitional}")
        if entry.torsion_found:
            logger.warning(f"Graph {entry_id}: torsion found, reduced {reduced}")
        if not entry.ranks_agree:
            entry.notes.append(f"basis rank claim {basis.rank_claim} differs from reduced rank {reduced.rank}")
            logger.warning(f"Graph {entry_id}: basis rank {basis.rank_claim} vs reduced rank {reduced.rank}")
        return entry

    def corpus_graphs(self, n_max: int, count: int, seed: int, exhaustive: bool = False) -> List[Graph]:
        """
        Seeded Hamiltonian graphs: rim plus random chords, or every chord subset

        Raises:
            CorpusParameterError: If n_max is outside 4..CORPUS_NMAX_CEILING or count < 0
        """
        if not 4 <= n_max <= settings.CORPUS_NMAX_CEILING:
            raise CorpusParameterError(
                f"n_max must lie in 4..{settings.CORPUS_NMAX_CEILING}",
                details={"n_max": n_max}
            )
        if count < 0:
            raise CorpusParameterError("count must be nonnegative", details={"count": count})
        if exhaustive:
            return [g for n in range(4, n_max + 1) for g in self.repository.hamiltonian_chord_subsets(n)]
        rng = random.Random(seed)
        return [
            self.repository.random_hamiltonian_graph(rng.randint(4, n_max), rng, settings.CORPUS_CHORD_PROBABILITY)
            for _ in range(count)
        ]

    def corpus(
        self,
        n_max: int,
        count: int,
        seed: int,
        exhaustive: bool = False,
        with_oracle: bool = True,
        budget: Optional[int] = None,
        cap: Optional[int] = None,
        cycle_type: Optional[int] = None,
        workers: Optional[int] = None
    ) -> CorpusReport:
        """
        Screen a seeded corpus of Hamiltonian graphs

        Entries are sorted by id, so the report does not depend on the
        number of workers.
        """
        budget = settings.CORPUS_ORACLE_BUDGET if budget is None else budget
        cycle_type = settings.DEFAULT_CYCLE_TYPE if cycle_type is None else cycle_type
        workers = settings.CORPUS_WORKERS if workers is None else workers

        graphs = self.corpus_graphs(n_max, count, seed, exhaustive)
        jobs: List[Job] = [
            (i, g.vertex_count, tuple(g.sorted_edges), g.hamiltonian_hint, budget, cap, cycle_type, with_oracle)
            for i, g in enumerate(graphs)
        ]
        logger.info(f"Corpus: {len(jobs)} graphs, n_max {n_max}, seed {seed}, workers {workers}")

        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                entries = list(pool.map(screen_graph, jobs))
        else:
            entries = [screen_graph(job) for job in jobs]
        entries.sort(key=lambda e: e.id)

        summary = CorpusSummary(graphs=len(entries))
        for entry in entries:
            if entry.definitional is not None:
                summary.definitional_checked += 1
                if entry.definitional != entry.reduced:
                    summary.engine_disagreements.append(entry.id)
            if entry.torsion_found:
                summary.torsion_graphs.append(entry.id)
            if not entry.ranks_agree:
                summary.rank_disagreements.append(entry.id)

        logger.info(
            f"Corpus done: {summary.graphs} graphs, {len(summary.torsion_graphs)} with torsion, "
            f"{len(summary.rank_disagreements)} basis rank disagreements"
        )
        return CorpusReport(
            seed=seed,
            n_max=n_max,
            count=count,
            exhaustive=exhaustive,
            entries=entries,
            summary=summary,
        )


def screen_graph(job: Job) -> ComparisonEntry:
    """Worker entry point: fresh services per graph keep caches bounded"""
    entry_id, n, edges, hint, budget, cap, cycle_type, with_oracle = job
    graph = Graph.from_pairs(n, edges, hint)
    service = ComparisonService()
    try:
        return service.compare_with_oracle(graph, budget, cap, cycle_type, with_oracle, entry_id)
    except NotHamiltonianError as exc:
        return ComparisonEntry(id=entry_id, vertex_count=n, hamiltonian=False, notes=[exc.reason])
