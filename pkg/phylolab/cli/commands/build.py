import argparse

from phylolab.cli.io import emit, load_digraph
from phylolab.formats.dot import emit_dot
from phylolab.formats.text import serialize_graph
from phylolab.services.core_graphs import underlying_graph
from phylolab.services.phylogeny import competition_graph, phylogeny_graph

GRAPHS = {
    "competition": competition_graph,
    "underlying": underlying_graph,
    "phylogeny": phylogeny_graph,
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("build", help="derive a graph from a DAG file")
    parser.add_argument("dag_file")
    kind = parser.add_mutually_exclusive_group()
    for name in GRAPHS:
        kind.add_argument(f"--{name}", dest="kind", action="store_const", const=name)
    parser.add_argument("--dot", action="store_true", help="emit DOT instead of a graph file")
    parser.set_defaults(handler=run, kind="phylogeny")


def run(args: argparse.Namespace) -> int:
    g = GRAPHS[args.kind](load_digraph(args.dag_file))
    emit(emit_dot(g, name=args.kind) if args.dot else serialize_graph(g))
    return 0
