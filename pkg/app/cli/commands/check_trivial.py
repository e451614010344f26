"""
check-trivial command - is a closed walk a boundary?
"""
import argparse
from pathlib import Path

from app.cli.options import EXIT_DISCREPANCY, EXIT_OK, emit
from app.repositories.graph_repository import GraphRepository
from app.services.report_service import ReportService
from app.utils.render import render_triviality

repository = GraphRepository()


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("check-trivial", parents=[parent], help="Test a closed walk for triviality")
    parser.add_argument("file", type=Path, help="Edge-list graph document")
    parser.add_argument("cycle", help='Closed walk, e.g. "13576421" or "1,3,11,1"')
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    graph = repository.load_graph(args.file)
    service = ReportService(timings=args.timings)
    report = service.triviality_report(graph, args.cycle, budget=args.max_simplices)
    emit(report, args.format, render_triviality)
    if args.strict and report.agree is False:
        return EXIT_DISCREPANCY
    return EXIT_OK
