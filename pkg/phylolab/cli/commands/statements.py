import argparse

from phylolab.cli.io import emit
from phylolab.services.verification import REGISTRY


def register(subparsers) -> None:
    parser = subparsers.add_parser("statements", help="list the verifiable statements")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    width = max(map(len, REGISTRY))
    for key, statement in REGISTRY.items():
        emit(f"{key.ljust(width)}  {statement.summary}")
    return 0
