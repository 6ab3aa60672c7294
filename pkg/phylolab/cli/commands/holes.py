import argparse

from phylolab.cli.io import emit, load_graph
from phylolab.services.chordality import enumerate_holes


def register(subparsers) -> None:
    parser = subparsers.add_parser("holes", help="list holes of a graph")
    parser.add_argument("graph_file")
    parser.add_argument("--max", type=int, default=None, help="stop after this many holes")
    parser.add_argument("--min-length", type=int, default=4)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    g = load_graph(args.graph_file)
    count = 0
    for hole in enumerate_holes(g, min_length=max(args.min_length, 4), limit=args.max):
        emit(f"hole {' '.join(map(str, hole.vertices))}")
        count += 1
    emit(f"# {count} hole(s)")
    return 0
