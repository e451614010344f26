"""
Command registry - argparse surface and exit-code contract
"""
import argparse
import sys
from typing import List, Optional

from atams.logging import get_logger

from app.cli.commands import check_trivial, corpus, h1
from app.cli.options import EXIT_BUDGET, EXIT_ERROR, EXIT_OK, common_parser
from app.core.config import settings
from app.core.exceptions import DomainError, EnumerationBudgetExceeded

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="First homology of reflexive graphs under cubical singular homology",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Register commands
    parent = common_parser()
    h1.register(subparsers, parent)
    check_trivial.register(subparsers, parent)
    corpus.register(subparsers, parent)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch

    Returns:
        0 success, 1 input or domain error, 2 enumeration budget exceeded,
        3 discrepancy (strict mode, or torsion in a corpus)
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for the budget
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        return args.handler(args)
    except EnumerationBudgetExceeded as exc:
        logger.error(f"{args.command}: {exc.reason}")
        sys.stderr.write(f"error: {exc.reason}\n")
        return EXIT_BUDGET
    except DomainError as exc:
        logger.error(f"{args.command}: {exc.reason}", exc_info=settings.DEBUG)
        sys.stderr.write(f"error: {exc.reason}\n")
        return EXIT_ERROR
