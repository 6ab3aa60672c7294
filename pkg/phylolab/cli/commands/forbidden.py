import argparse

from phylolab.cli.io import add_bounds, bounds_from, emit, load_graph
from phylolab.services.forbidden import detect_forbidden


def register(subparsers) -> None:
    parser = subparsers.add_parser("forbidden", help="search for forbidden induced subgraphs")
    parser.add_argument("graph_file")
    add_bounds(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    verdict = detect_forbidden(load_graph(args.graph_file), bounds_from(args))
    if verdict.clean:
        emit("clean")
        return 0
    for violation in verdict.violations:
        emit(f"violation {violation.pattern} {' '.join(map(str, violation.embedding))}")
    return 1
