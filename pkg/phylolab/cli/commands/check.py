import argparse

from phylolab.cli.io import emit, load_graph
from phylolab.services.chordality import is_chordal


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="chordality test with a certificate")
    parser.add_argument("graph_file")
    parser.add_argument("--chordal", action="store_true", help="run the chordality test (the default)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    certificate = is_chordal(load_graph(args.graph_file))
    if certificate.chordal:
        emit(f"chordal\npeo {' '.join(map(str, certificate.peo))}")
        return 0
    emit(f"non-chordal\nhole {' '.join(map(str, certificate.hole.vertices))}")
    return 1
