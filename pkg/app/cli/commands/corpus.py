"""
corpus command - screen seeded Hamiltonian graphs for torsion and rank agreement
"""
import argparse
import time

from app.cli.options import EXIT_DISCREPANCY, EXIT_OK, emit, positive_int
from app.core.config import settings
from app.services.comparison_service import ComparisonService
from app.utils.render import render_corpus

comparison_service = ComparisonService()


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("corpus", parents=[parent], help="Screen a corpus of Hamiltonian graphs")
    parser.add_argument("--nmax", type=int, default=7, help="Largest vertex count")
    parser.add_argument("--count", type=int, default=200, help="Number of random graphs")
    parser.add_argument("--seed", type=int, default=42, help="Random seed")
    parser.add_argument("--exhaustive", action="store_true", help="Every chord subset for n in 4..nmax")
    parser.add_argument("--no-oracle", dest="with_oracle", action="store_false",
                        help="Skip the definitional oracle")
    parser.add_argument("--workers", type=positive_int, default=None, help="Process pool size")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = comparison_service.corpus(
        n_max=args.nmax,
        count=args.count,
        seed=args.seed,
        exhaustive=args.exhaustive,
        with_oracle=args.with_oracle,
        budget=args.max_simplices,
        cap=args.cycle_cap,
        cycle_type=args.cycle_type,
        workers=args.workers,
    )
    if settings.REPORT_TIMINGS if args.timings is None else args.timings:
        report.timings = {"total": round(time.perf_counter() - start, 6)}
    emit(report, args.format, render_corpus)

    summary = report.summary
    if summary.torsion_graphs:
        return EXIT_DISCREPANCY
    if args.strict and (summary.rank_disagreements or summary.engine_disagreements):
        return EXIT_DISCREPANCY
    return EXIT_OK
