import argparse

from phylolab.cli.io import add_bounds, bounds_from, emit
from phylolab.formats.text import serialize_digraph
from phylolab.schemas.verification import EnumSpec
from phylolab.services.core_graphs import digest
from phylolab.services.enumeration import enumerate_dags


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate", help="count or print bounded DAGs")
    add_bounds(parser)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--emit", action="store_true", help="print every digraph")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    spec = EnumSpec(
        n=args.n, bounds=bounds_from(args), mode="random" if args.samples else "staircase",
        samples=args.samples, seed=args.seed,
    )
    count = 0
    for d in enumerate_dags(spec):
        if args.emit:
            emit(f"# {digest(d)}\n{serialize_digraph(d)}")
        count += 1
    emit(f"count {count}")
    return 0
