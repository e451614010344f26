"""
Text rendering of reports
"""
from typing import List

from app.models.homology import HomologyGroup
from app.models.simplex import Simplex2
from app.schemas.report import CorpusReport, H1Report, HomologyInfo, ReportBase, TrivialityReport


def simplex_inline(simplex: Simplex2) -> str:
    """One-line matrix: [a b c|d e f|g h i]"""
    return "[" + "|".join(" ".join(str(v) for v in row) for row in simplex) + "]"


def group_text(info: HomologyInfo) -> str:
    return str(HomologyGroup(info.rank, tuple(info.torsion)))


def _pairs(pairs: List[List[int]]) -> str:
    return ", ".join("{" + f"{u},{v}" + "}" for u, v in pairs) or "-"


def _timings(report: ReportBase, lines: List[str]) -> None:
    if report.timings:
        lines.append("timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in sorted(report.timings.items())))


def render_h1(report: H1Report) -> str:
    g = report.graph
    lines = [
        f"graph: {g.vertex_count} vertices, {len(g.edges)} edges",
        f"method: {report.method}",
    ]
    if report.homology is not None:
        lines.append(f"H1 = {group_text(report.homology)} (rank {report.homology.rank}, torsion {report.homology.torsion})")
    if report.simplices_2 is not None:
        lines.append(f"2-simplices: {report.simplices_2}, distinct boundary columns: {report.d2_columns}")

    basis = report.basis
    if basis is not None:
        lines.append(f"circle form order: {' '.join(str(v) for v in g.hamiltonian_order or [])}")
        lines.append(f"diagonals: {_pairs(g.diagonals)}")
        ham = "kept" if basis.includes_hamiltonian else "filtered (trivial)"
        lines.append(f"hamiltonian class {basis.hamiltonian_walk}: {ham}")
        for i, net in enumerate(basis.nets, start=1):
            lines.append(f"net {i}: {_pairs(net.edges)}")
            lines.append(f"  subgraph: {len(net.subgraph_vertices)} vertices, {len(net.subgraph_edges)} edges")
            if net.spanning_tree is not None:
                lines.append(f"  spanning forest: {_pairs(net.spanning_tree)}; diagonals {_pairs(net.chord_part)}")
            card = net.cardinality
            if card.formula is None:
                lines.append(f"  cardinality: {card.note}")
            else:
                verdict = "match" if card.matches else f"mismatch ({card.note})"
                lines.append(f"  cardinality: formula {card.formula}, actual {card.actual}: {verdict}")
            if net.nontrivial_cycles:
                lines.append(f"  nontrivial cycles in subgraph: {' '.join(net.nontrivial_cycles)}")
        for entry in basis.chord_classes:
            lines.append(f"class {{{entry.chord[0]},{entry.chord[1]}}} type {entry.cycle_type}: {entry.walk}")
        for entry in basis.filtered_trivial:
            lines.append(f"filtered {{{entry.chord[0]},{entry.chord[1]}}} type {entry.cycle_type}: {entry.walk} (trivial)")
        if basis.isolated_chords:
            lines.append(f"isolated diagonals: {_pairs(basis.isolated_chords)}")
        lines.append(f"rank claim: {basis.rank_claim}")
        for note in basis.notes:
            lines.append(f"note: {note}")

    for line in report.discrepancies:
        lines.append(f"DISCREPANCY: {line}")
    _timings(report, lines)
    return "\n".join(lines) + "\n"


def render_triviality(report: TrivialityReport) -> str:
    lines = [f"walk {report.walk} on {report.graph.vertex_count} vertices"]
    for name, verdict in (("reduced", report.reduced), ("definitional", report.definitional)):
        if verdict.skipped:
            lines.append(f"{name}: skipped ({verdict.skipped})")
            continue
        lines.append(f"{name}: {'trivial' if verdict.trivial else 'nontrivial'}")
        for term in verdict.certificate:
            lines.append(f"  {term}")
    if report.agree is False:
        lines.append("DISCREPANCY: engines disagree")
    _timings(report, lines)
    return "\n".join(lines) + "\n"


def render_corpus(report: CorpusReport) -> str:
    s = report.summary
    mode = "exhaustive" if report.exhaustive else f"{report.count} random"
    lines = [
        f"corpus: {mode} Hamiltonian graphs, n_max {report.n_max}, seed {report.seed}",
        f"graphs: {s.graphs}, definitional checks: {s.definitional_checked}",
        f"torsion: {s.torsion_graphs or 'none'}",
        f"basis rank disagreements: {s.rank_disagreements or 'none'}",
        f"engine disagreements: {s.engine_disagreements or 'none'}",
    ]
    for entry in report.entries:
        if entry.torsion_found or not entry.ranks_agree or not entry.hamiltonian:
            reduced = group_text(entry.reduced) if entry.reduced else "-"
            lines.append(
                f"  #{entry.id} n={entry.vertex_count} chords {_pairs(entry.chords)}: "
                f"reduced {reduced}, basis rank {entry.basis_rank}"
            )
    _timings(report, lines)
    return "\n".join(lines) + "\n"
