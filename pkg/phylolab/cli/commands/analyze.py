import argparse

from phylolab.cli.io import add_bounds, emit, load_digraph, vertex_list
from phylolab.formats.records import dumps
from phylolab.schemas.graph import DegreeBounds
from phylolab.services.core_graphs import degree_bounds_of
from phylolab.services.hole_analysis import analyze_hole, check_hole_statements


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="hole context and statement reports for a (D, H) pair")
    parser.add_argument("dag_file")
    parser.add_argument("--hole", type=vertex_list, required=True, help="comma separated hole of U(D)")
    add_bounds(parser, required=False)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    d = load_digraph(args.dag_file)
    observed = degree_bounds_of(d)
    bounds = DegreeBounds(
        i=observed.i if args.i is None else args.i,
        j=observed.j if args.j is None else args.j,
    )
    context = analyze_hole(d, args.hole)
    emit(dumps({"context": context.summary(), "bounds": str(bounds)}))
    reports = check_hole_statements(d, args.hole, bounds)
    for report in reports:
        emit(report.model_dump_json(exclude_none=True))
    return 1 if any(r.failed for r in reports) else 0
