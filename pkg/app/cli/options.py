"""
Shared command options and output helpers
"""
import argparse
import sys
from typing import Callable

from app.schemas.report import ReportBase

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2
EXIT_DISCREPANCY = 3


def positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cycle_type(text: str) -> int:
    value = int(text)
    if value not in (1, 2, 3, 4):
        raise argparse.ArgumentTypeError("cycle type must be 1, 2, 3 or 4")
    return value


def common_parser() -> argparse.ArgumentParser:
    """Options shared by every command"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["text", "json"], default="text", help="Report format")
    parent.add_argument("--strict", action="store_true", help="Exit 3 when a discrepancy is detected")
    parent.add_argument("--timings", action="store_true", default=None, help="Include wall-clock timings")
    parent.add_argument("--max-simplices", type=positive_int, default=None, help="2-simplex enumeration budget")
    parent.add_argument("--cycle-cap", type=positive_int, default=None, help="Witness cycle length cap")
    parent.add_argument("--type", dest="cycle_type", type=cycle_type, default=None, help="Typed cycle for the basis (1..4)")
    return parent


def emit(report: ReportBase, fmt: str, render: Callable[[ReportBase], str]) -> None:
    text = report.to_json() + "\n" if fmt == "json" else render(report)
    sys.stdout.write(text)
