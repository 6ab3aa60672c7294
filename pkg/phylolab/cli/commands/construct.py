import argparse

from phylolab.cli.io import emit
from phylolab.formats.dot import emit_dot
from phylolab.formats.text import serialize_digraph
from phylolab.services.constructions import FAMILIES, construct


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="build a named digraph family")
    parser.add_argument("family", choices=sorted(FAMILIES))
    parser.add_argument("--param", type=int, default=None)
    parser.add_argument("--dot", action="store_true")
    parser.add_argument("--validate", action="store_true", help="re-check every claimed property")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    result = construct(args.family, args.param, validate=args.validate or None)
    if args.dot:
        emit(emit_dot(result.digraph, result.name_map, name=result.family))
        return 0
    lines = [f"# {result.family} {result.bounds}"]
    lines += [f"# {label} = {name}" for label, name in enumerate(result.names())]
    lines += [f"# claim {claim.describe()}" for claim in result.claimed]
    emit("\n".join(lines) + "\n" + serialize_digraph(result.digraph))
    return 0
