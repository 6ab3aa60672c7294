import argparse

from phylolab.cli.io import add_bounds, bounds_from, emit, load_graph
from phylolab.formats.text import serialize_digraph
from phylolab.services.realization import realize


def register(subparsers) -> None:
    parser = subparsers.add_parser("realize", help="find a bounded DAG whose phylogeny graph is the input")
    parser.add_argument("graph_file")
    add_bounds(parser)
    parser.add_argument("--extra", type=int, default=0, help="hidden vertices allowed")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    witness = realize(load_graph(args.graph_file), bounds_from(args), extra=args.extra)
    emit("none" if witness is None else serialize_digraph(witness))
    return 0
