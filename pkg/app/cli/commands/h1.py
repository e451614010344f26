"""
h1 command - H1 of one graph by the chosen engine
"""
import argparse
from pathlib import Path

from app.cli.options import EXIT_DISCREPANCY, EXIT_OK, emit
from app.repositories.graph_repository import GraphRepository
from app.services.report_service import ReportService
from app.utils.render import render_h1

repository = GraphRepository()


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("h1", parents=[parent], help="Compute H1 of a graph")
    parser.add_argument("file", type=Path, help="Edge-list graph document")
    parser.add_argument(
        "--method",
        choices=["definitional", "reduced", "basis"],
        default="reduced",
        help="Engine: definitional chain complex, reduced model, or Hamiltonian basis"
    )
    parser.add_argument("--dump-matrices", type=Path, default=None, metavar="DIR",
                        help="Write d1/d2 coordinate lists (definitional method)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    graph = repository.load_graph(args.file)
    service = ReportService(timings=args.timings)
    report = service.h1_report(
        graph,
        args.method,
        budget=args.max_simplices,
        cap=args.cycle_cap,
        cycle_type=args.cycle_type,
        dump_dir=args.dump_matrices,
    )
    emit(report, args.format, render_h1)
    if args.strict and report.discrepancies:
        return EXIT_DISCREPANCY
    return EXIT_OK
