from app.cli.registry import build_parser, run

__all__ = ["build_parser", "run"]
