"""Shared argument plumbing for the sub-commands"""
import argparse
import sys
from typing import Callable, List, TypeVar

from phylolab.core.errors import FormatError
from phylolab.formats.text import decode, parse_digraph, parse_graph, read_digraph, read_graph
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.graph import DegreeBounds

T = TypeVar("T")


def _load(path: str, parse: Callable[[str], T], read: Callable[[str], T]) -> T:
    try:
        if path == "-":
            return parse(decode(sys.stdin.buffer.read()))
        return read(path)
    except FormatError as exc:
        exc.detail = f"{path}:{exc.detail}"
        raise


def load_digraph(path: str) -> Digraph:
    return _load(path, parse_digraph, read_digraph)


def load_graph(path: str) -> Graph:
    return _load(path, parse_graph, read_graph)


def add_bounds(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--i", type=int, required=required, help="indegree bound")
    parser.add_argument("--j", type=int, required=required, help="outdegree bound")


def bounds_from(args: argparse.Namespace) -> DegreeBounds:
    return DegreeBounds(i=args.i, j=args.j)


def vertex_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated vertices, got {text!r}")


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
