import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from phylolab.cli.commands import (
    analyze, build, check, construct, enumeration, forbidden, holes, realize, statements, verify,
)
from phylolab.core.config import settings
from phylolab.core.errors import PhylolabError
from phylolab.core.log import configure_logging

logger = logging.getLogger(__name__)

# Sub-commands in help order
COMMANDS = [build, check, holes, analyze, forbidden, construct, verify, realize, statements, enumeration]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Phylogeny graphs of degree-bounded acyclic digraphs",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress the version banner")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    if not args.quiet:
        print(f"{settings.PROJECT_NAME} {settings.VERSION}", file=sys.stderr)
    try:
        return args.handler(args)
    except PhylolabError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_status
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        print(f"error: {problems}", file=sys.stderr)
        return 2
    except OSError as exc:
        logger.debug("I/O failure", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 2
