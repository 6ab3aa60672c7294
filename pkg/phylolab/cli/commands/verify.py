import argparse
import sys

from phylolab.cli.io import add_bounds
from phylolab.core.config import settings
from phylolab.formats.records import RecordWriter
from phylolab.schemas.verification import VerifyParams
from phylolab.services.verification import REGISTRY, Verifier


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="check a statement over enumerated or sampled DAGs")
    parser.add_argument("statement", help=f"one of: {', '.join(REGISTRY)}")
    add_bounds(parser)
    parser.add_argument("--n", type=int, required=True, help="largest vertex count")
    parser.add_argument("--n-min", type=int, default=1)
    parser.add_argument("--samples", type=int, default=None, help="switch to random mode")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    params = VerifyParams(
        i=args.i, j=args.j, n=args.n, n_min=args.n_min,
        samples=args.samples, seed=args.seed, workers=args.workers or settings.WORKERS,
    )
    writer = RecordWriter(sys.stdout)
    report = Verifier(workers=args.workers).run(args.statement, params, sink=writer)
    writer.write(report.summary_record())
    return 0 if report.verdict == "pass" else 1
