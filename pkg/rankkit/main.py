import argparse
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn

from rankkit import __version__
from rankkit.commands import gen, rank, verify
from rankkit.config.settings import get_settings
from rankkit.shared.exceptions import EXIT_USAGE, DomainError, format_domain_error, get_exit_code

logger = logging.getLogger(__name__)


# Diagnostics go to stderr; stdout carries only reports and matrices
def setup_logging(level: str | int = logging.WARNING) -> None:
    logging.basicConfig(
        level=level,
        format="[%(asctime)s] [%(levelname)s] %(message)s",
        stream=sys.stderr,
        force=True,
    )


class RankkitArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the CLI's usage code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> RankkitArgumentParser:
    parser = RankkitArgumentParser(
        prog="rankkit",
        description="Exact factorization ranks of band matrices over semirings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug detail to stderr")
    parser.set_defaults(oracle_max_n=None)
    subparsers = parser.add_subparsers(dest="command", required=True)
    rank.register(subparsers)
    verify.register(subparsers)
    gen.register(subparsers)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_settings(
        oracle_max_dimension=args.oracle_max_n,
        log_level="DEBUG" if args.verbose else None,
    )
    setup_logging(settings.log_level)

    try:
        return int(args.handler(args, settings))
    except DomainError as exc:
        logger.error(format_domain_error(exc))
        return get_exit_code(exc)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
