"""
reflexive_h1 - command-line entry point
"""
import sys

from atams.logging import setup_logging_from_settings

from app.core.config import settings
from app.cli import run

# Setup logging
setup_logging_from_settings(settings)


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
