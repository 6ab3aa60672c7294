"""Statement registry and the partitioned verification engine."""
import logging
from functools import cached_property
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from phylolab.core.config import settings
from phylolab.core.errors import CapExceeded, InvalidParams, PhylolabError, UnknownStatement
from phylolab.models.bitset import bit, from_vertices, members, size
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.verification import Counterexample, ReportRecord, VerificationReport, VerifyParams
from phylolab.services.chordality import class_predicates, enumerate_holes
from phylolab.services.cliques import clique_number, max_clique, maximal_clique_masks
from phylolab.services.constructions import construct, expand_clique, validate_claims
from phylolab.services.core_graphs import check_bounds, digest, graph_digest, induced, underlying_graph
from phylolab.services.enumeration import (
    LONG_HOLE_GENERATOR, RANDOM_GENERATOR, enumerate_staircase, long_hole_dag, random_dag, staircase_prefixes,
)
from phylolab.services.forbidden import (
    check_neighborhood_bound, contains_induced, build_pattern, detect_forbidden, find_induced_stars, find_pattern,
    find_star, pattern,
)
from phylolab.services.hole_analysis import check_hole_statements
from phylolab.services.isomorphism import graph_invariant, graphs_isomorphic
from phylolab.services.phylogeny import phylogeny_graph
from phylolab.services.realization import realize

logger = logging.getLogger(__name__)


class Outcome(NamedTuple):
    fired: bool
    ok: bool
    witness: Optional[Dict[str, Any]] = None


class Instance:
    """One digraph under test, with lazily derived graphs"""

    def __init__(self, digraph: Digraph, bounds: DegreeBounds, hole: Optional[List[int]] = None):
        self.digraph = digraph
        self.bounds = bounds
        self.hole = hole

    @cached_property
    def phylogeny(self) -> Graph:
        return phylogeny_graph(self.digraph)

    @cached_property
    def underlying(self) -> Graph:
        return underlying_graph(self.digraph)

    def holes(self) -> Iterator[List[int]]:
        """The planted hole when there is one, otherwise every hole of length >= 5 in U(D)"""
        if self.hole is not None:
            yield self.hole
            return
        for hole in enumerate_holes(self.underlying, min_length=5, limit=settings.HOLE_LIMIT):
            yield hole.vertices


# Statement checks

def _hole_statement(key: str) -> Callable[[Instance], Iterator[Outcome]]:
    def check(inst: Instance) -> Iterator[Outcome]:
        for hole in inst.holes():
            report = next(r for r in check_hole_statements(inst.digraph, hole, inst.bounds) if r.statement == key)
            witness = dict(report.witness or {}, hole=hole) if report.failed else None
            yield Outcome(report.fired, not report.failed, witness)
    return check


def _thm_1_4(inst: Instance) -> Iterator[Outcome]:
    verdict = detect_forbidden(inst.phylogeny, inst.bounds)
    yield Outcome(True, verdict.clean, {"violations": [v.model_dump() for v in verdict.violations]})


def _prop_3_1(inst: Instance) -> Iterator[Outcome]:
    found = check_neighborhood_bound(inst.phylogeny, inst.bounds.j)
    yield Outcome(True, not found, {"violations": [v.model_dump() for v in found]})


def _prop_3_2(inst: Instance) -> Iterator[Outcome]:
    star = find_star(inst.phylogeny, inst.bounds.j + 2)
    yield Outcome(True, star is None, {"star": star})


def _lem_3_3(inst: Instance) -> Iterator[Outcome]:
    d = inst.digraph
    fired = False
    for centre, leaves in find_induced_stars(inst.phylogeny, inst.bounds.j + 1):
        fired = True
        if size(d.in_adj[centre] & from_vertices(leaves)) != 1:
            yield Outcome(True, False, {"centre": centre, "leaves": leaves})
            return
    yield Outcome(fired, True)


def _prop_3_4(inst: Instance) -> Iterator[Outcome]:
    j = inst.bounds.j
    found = contains_induced(inst.phylogeny, build_pattern(pattern("complete_bipartite", m=j + 1, n=j + 1)))
    yield Outcome(True, found is None, {"embedding": found})


def _prop_fan_wheel(inst: Instance) -> Iterator[Outcome]:
    l = 2 * inst.bounds.j + 3
    for kind in ("fan", "wheel"):
        found = find_pattern(inst.phylogeny, pattern(kind, l=l))
        if found is not None:
            yield Outcome(True, False, {"pattern": kind, "embedding": found})
            return
    yield Outcome(True, True)


def _lem_3_8_source(inst: Instance) -> Iterator[Outcome]:
    d, pg = inst.digraph, inst.phylogeny
    i, j = inst.bounds.i, inst.bounds.j
    fired = False
    for u in range(d.n):
        # u is a source of D[u + N(u)] exactly when it has no in-neighbour at all
        if pg.degree(u) != i * j or d.in_adj[u]:
            continue
        fired = True
        prey = list(members(d.out_adj[u]))
        failure = None
        if len(prey) != j:
            failure = {"part": 1, "vertex": u, "outdegree": len(prey)}
        else:
            for v in prey:
                if size(d.in_adj[v]) != i or d.in_adj[v] & d.out_adj[u]:
                    failure = {"part": 2, "vertex": u, "out_neighbor": v}
                    break
            for v, w in combinations(prey, 2):
                if failure is None and d.in_adj[v] & d.in_adj[w] != bit(u):
                    failure = {"part": 3, "vertex": u, "pair": [v, w]}
        if failure:
            yield Outcome(True, False, failure)
            return
    yield Outcome(fired, True)


def _lone_source(d: Digraph) -> Tuple[bool, Optional[int]]:
    """(fired, failing source) for the source-existence lemma on one acyclic digraph"""
    if d.n < 2:
        return False, None
    sources = d.sources()
    for u in sources:
        if all(size(d.in_adj[v]) >= 2 for v in members(d.out_adj[u])):
            return True, (u if len(sources) < 2 else None)
    return False, None


def _lem_source_exists(inst: Instance) -> Iterator[Outcome]:
    d = inst.digraph
    contexts = [(d, list(range(d.n)))]
    for clique in maximal_clique_masks(inst.phylogeny):
        if size(clique) >= 2:
            contexts.append(induced(d, clique))
    fired = False
    for sub, labels in contexts:
        applies, lone = _lone_source(sub)
        fired = fired or applies
        if lone is not None:
            yield Outcome(True, False, {"source": labels[lone], "within": labels})
            return
    yield Outcome(fired, True)


def _thm_omega_ij(inst: Instance) -> Iterator[Outcome]:
    omega = clique_number(inst.phylogeny)
    limit = inst.bounds.i * inst.bounds.j
    yield Outcome(True, omega <= limit, {"omega": omega, "limit": limit})


def _thm_omega_3i2(inst: Instance) -> Iterator[Outcome]:
    omega = clique_number(inst.phylogeny)
    limit = 3 * inst.bounds.i // 2 + 1
    yield Outcome(True, omega <= limit, {"omega": omega, "limit": limit})


def _lem_expand(inst: Instance) -> Iterator[Outcome]:
    clique = max_clique(inst.phylogeny)
    if len(clique) < 2:
        yield Outcome(False, True)
        return
    grown = expand_clique(inst.digraph, clique, 1)
    bounds = DegreeBounds(i=inst.bounds.i + 1, j=inst.bounds.j)
    ok = check_bounds(grown, bounds).passed and phylogeny_graph(grown).is_clique(from_vertices(clique + [grown.n - 1]))
    yield Outcome(True, ok, {"clique": clique})


def _char_1j(inst: Instance) -> Iterator[Outcome]:
    flags = class_predicates(inst.phylogeny)
    ok = flags.is_forest and flags.max_degree <= inst.bounds.j + 1
    yield Outcome(True, ok, {"is_forest": flags.is_forest, "max_degree": flags.max_degree})


def _char_i1(inst: Instance) -> Iterator[Outcome]:
    flags = class_predicates(inst.phylogeny)
    ok = (
        flags.is_diamond_free and flags.is_chordal and flags.omega <= inst.bounds.i + 1
        and flags.clique_graph_is_forest
    )
    yield Outcome(True, ok, flags.model_dump())


# Converse directions: every graph with the property is some P(D)

def _graphs_on(n: int) -> Iterator[Graph]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for chosen in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[t] for t in range(len(pairs)) if chosen >> t & 1])


def _is_forest_with_degree(g: Graph, bounds: DegreeBounds) -> bool:
    if g.edge_count() >= g.n:
        return False
    flags = class_predicates(g)
    return flags.is_forest and flags.max_degree <= bounds.j + 1


def _is_i1_graph(g: Graph, bounds: DegreeBounds) -> bool:
    flags = class_predicates(g)
    return (
        flags.is_diamond_free and flags.is_chordal and flags.omega <= bounds.i + 1
        and flags.clique_graph_is_forest
    )


class Converse:
    """Every graph on up to n vertices with the property is P(D) for some bounded D"""

    def __init__(self, predicate: Callable[[Graph, DegreeBounds], bool]):
        self.predicate = predicate

    def __call__(self, params: VerifyParams, bounds: DegreeBounds) -> Iterator[Tuple[Outcome, Graph]]:
        for n in range(params.n_min, params.n + 1):
            realized: Dict[Tuple, List[Graph]] = {}
            for d in enumerate_staircase(n, bounds):
                pg = phylogeny_graph(d)
                bucket = realized.setdefault(graph_invariant(pg), [])
                if not any(graphs_isomorphic(pg, r).isomorphic for r in bucket):
                    bucket.append(pg)
            seen: Dict[Tuple, List[Graph]] = {}
            for g in _graphs_on(n):
                if not self.predicate(g, bounds):
                    continue
                key = graph_invariant(g)
                bucket = seen.setdefault(key, [])
                if any(graphs_isomorphic(g, r).isomorphic for r in bucket):
                    continue
                bucket.append(g)
                ok = any(graphs_isomorphic(g, r).isomorphic for r in realized.get(key, []))
                yield Outcome(True, ok, {"direction": "converse", "edges": [list(e) for e in g.edges()]}), g

    def reproduces(self, g: Graph, bounds: DegreeBounds) -> bool:
        """The graph has the property and no bounded DAG on its vertices realizes it"""
        try:
            return self.predicate(g, bounds) and realize(g, bounds) is None
        except PhylolabError:
            return False


# Construction-side checks run once per report

def _construction_check(family_for: Callable[[DegreeBounds], Optional[Tuple[str, int]]]):
    def run(bounds: DegreeBounds) -> Dict[str, Any]:
        chosen = family_for(bounds)
        if chosen is None:
            return {}
        family, param = chosen
        result = construct(family, param)
        failed = validate_claims(result)
        return {"construction": {
            "family": family,
            "param": param,
            "claims": [c.describe() for c in result.claimed],
            "holds": not failed,
        }}
    return run


def _tightness_family(bounds: DegreeBounds) -> Optional[Tuple[str, int]]:
    if bounds.i % 2 == 0:
        return "clique_2k2", bounds.i // 2
    return "clique_2k1_2", bounds.i // 2


class Statement:
    def __init__(
        self,
        key: str,
        summary: str,
        check: Callable[[Instance], Iterable[Outcome]],
        per_hole: bool = False,
        bounds_for: Optional[Callable[[VerifyParams], DegreeBounds]] = None,
        requires: Optional[Callable[[DegreeBounds], Optional[str]]] = None,
        converse: Optional[Converse] = None,
        construction: Optional[Callable[[DegreeBounds], Dict[str, Any]]] = None,
        tracks_omega: bool = False,
    ):
        self.key = key
        self.summary = summary
        self.check = check
        self.per_hole = per_hole
        self.bounds_for = bounds_for or (lambda params: params.bounds)
        self.requires = requires
        self.converse = converse
        self.construction = construction
        self.tracks_omega = tracks_omega


def _need_ij2(bounds: DegreeBounds) -> Optional[str]:
    if bounds.i < 2 or bounds.j < 2:
        return "needs i >= 2 and j >= 2"
    return None


def _need_3i2(bounds: DegreeBounds) -> Optional[str]:
    if bounds.i < 4 or bounds.j != 2:
        return "needs i >= 4 and j = 2"
    return None


def _need_j2(bounds: DegreeBounds) -> Optional[str]:
    if bounds.j != 2:
        return "the hole statements are about (i,2) digraphs; use j = 2"
    return None


HOLE_STATEMENTS = {
    "thm_1_1": "hole of length >= 3i+1 in U(D) leaves a hole in P(D)[V(H)]",
    "thm_1_2": "(2,2) digraph: hole of length >= 7 in U(D) leaves a hole in P(D)[V(H)]",
    "lem_2_1": "cycle obtained from H: length, out-neighbours on H, chords cared for off H",
    "prop_2_2": "each chord has one caring vertex; chord components share an out-neighbour",
    "cor_2_3": "C-vertices with two out-neighbours on H meet no chord",
    "lem_2_6": "pairs of a maximum clique of size >= 4 in V(C) are joined by chords",
    "lem_2_7": "omega(P(D)[V(C)]) <= i for i >= 3",
    "thm_2_5": "small cliques in V(C) force a hole in P(D)[V(C)]",
    "thm_2_8": "length conditions on H force a hole in P(D)[V(C)]",
}

REGISTRY: Dict[str, Statement] = {
    key: Statement(key, summary, _hole_statement(key), per_hole=True, requires=_need_j2)
    for key, summary in HOLE_STATEMENTS.items()
}
REGISTRY.update({
    "thm_1_4": Statement(
        "thm_1_4", "P(D) avoids every forbidden induced subgraph", _thm_1_4, requires=_need_ij2),
    "prop_3_1": Statement(
        "prop_3_1", "|N(u)| <= omega(N(u)) * (j+1) in P(D)", _prop_3_1),
    "prop_3_2": Statement(
        "prop_3_2", "P(D) has no induced K_{1,j+2}", _prop_3_2,
        construction=_construction_check(lambda b: ("star_realizer", b.j))),
    "lem_3_3": Statement(
        "lem_3_3", "the centre of an induced K_{1,j+1} has one in-neighbour in it", _lem_3_3),
    "prop_3_4": Statement(
        "prop_3_4", "P(D) has no induced K_{j+1,j+1}", _prop_3_4,
        construction=_construction_check(lambda b: ("bipartite_realizer", b.j) if b.i >= 2 and b.j >= 2 else None)),
    "char_1j": Statement(
        "char_1j", "(1,j) phylogeny graphs are the forests of maximum degree <= j+1", _char_1j,
        bounds_for=lambda params: DegreeBounds(i=1, j=params.j),
        converse=Converse(_is_forest_with_degree)),
    "char_i1": Statement(
        "char_i1", "(i,1) phylogeny graphs are the diamond-free chordal graphs with omega <= i+1 "
        "and a forest clique graph", _char_i1,
        bounds_for=lambda params: DegreeBounds(i=params.i, j=1),
        converse=Converse(_is_i1_graph)),
    "prop_fan_wheel": Statement(
        "prop_fan_wheel", "P(D) has no induced fan or wheel on a rim of 2j+3 or more", _prop_fan_wheel,
        requires=_need_ij2,
        construction=_construction_check(lambda b: ("wheel_realizer", b.j))),
    "lem_3_8_source": Statement(
        "lem_3_8_source", "a source with ij neighbours has outdegree j and disjoint prey", _lem_3_8_source),
    "lem_source_exists": Statement(
        "lem_source_exists", "a source whose prey all have indegree >= 2 is not the only source",
        _lem_source_exists),
    "thm_omega_ij": Statement(
        "thm_omega_ij", "omega(P(D)) <= ij", _thm_omega_ij, tracks_omega=True),
    "thm_omega_3i2": Statement(
        "thm_omega_3i2", "omega(P(D)) <= 3i/2 + 1 for (i,2) digraphs, i >= 4", _thm_omega_3i2,
        requires=_need_3i2, construction=_construction_check(_tightness_family), tracks_omega=True),
    "lem_expand": Statement(
        "lem_expand", "copying a clique source grows the clique and raises i by one", _lem_expand),
})


def get_statement(key: str) -> Statement:
    if key not in REGISTRY:
        raise UnknownStatement(f"unknown statement {key}; expected one of {', '.join(sorted(REGISTRY))}")
    return REGISTRY[key]


# Partitioned execution

class PartitionResult(NamedTuple):
    digraphs: int
    instances: int
    fired: int
    failures: List[Tuple[int, Digraph, Dict[str, Any]]]
    max_omega: int


def _run_partition(task: Tuple) -> PartitionResult:
    key, i, j, source, spec = task
    statement = REGISTRY[key]
    bounds = DegreeBounds(i=i, j=j)
    digraphs = instances = fired = 0
    max_omega = 0
    failures = []
    for position, (digraph, hole) in enumerate(_instances(source, spec, bounds)):
        inst = Instance(digraph, bounds, hole)
        if statement.tracks_omega:
            max_omega = max(max_omega, clique_number(inst.phylogeny))
        for outcome in statement.check(inst):
            instances += 1
            fired += outcome.fired
            if not outcome.ok:
                failures.append((position, digraph, outcome.witness or {}))
        digraphs += 1
    return PartitionResult(digraphs, instances, fired, failures, max_omega)


def _instances(source: str, spec: Tuple, bounds: DegreeBounds) -> Iterator[Tuple[Digraph, Optional[List[int]]]]:
    if source == "staircase":
        n, prefix = spec
        for d in enumerate_staircase(n, bounds, prefix):
            yield d, None
    elif source == "random":
        n_min, n_max, seed, start, stop = spec
        for index in range(start, stop):
            n = n_min + index % (n_max - n_min + 1)
            yield random_dag(n, bounds, seed, index), None
    else:
        max_n, seed, start, stop = spec
        for index in range(start, stop):
            yield long_hole_dag(max_n, bounds, seed, index)


def _tasks(statement: Statement, params: VerifyParams, bounds: DegreeBounds) -> Tuple[List[Tuple], str, Optional[str]]:
    if params.samples is None:
        cap = settings.ENUM_CAP
        if params.n > cap:
            raise CapExceeded(f"staircase enumeration on {params.n} vertices exceeds the cap {cap}")
        tasks = [
            (statement.key, bounds.i, bounds.j, "staircase", (n, prefix))
            for n in range(params.n_min, params.n + 1)
            for prefix in staircase_prefixes(n)
        ]
        scope = f"exhaustive staircase DAGs on {params.n_min}..{params.n} vertices, bounds {bounds}"
        return tasks, scope, None
    block = max(1, -(-params.samples // (4 * params.workers)))
    blocks = [(start, min(start + block, params.samples)) for start in range(0, params.samples, block)]
    if statement.per_hole:
        tasks = [(statement.key, bounds.i, bounds.j, "long_hole", (params.n, params.seed, a, b)) for a, b in blocks]
        scope = (f"{params.samples} random DAGs with a planted hole of length 5..{min(params.n, 3 * bounds.i + 3)}, "
                 f"at most {params.n} vertices, bounds {bounds}, seed {params.seed}")
        return tasks, scope, LONG_HOLE_GENERATOR
    tasks = [
        (statement.key, bounds.i, bounds.j, "random", (params.n_min, params.n, params.seed, a, b))
        for a, b in blocks
    ]
    scope = f"{params.samples} random DAGs on {params.n_min}..{params.n} vertices, bounds {bounds}, seed {params.seed}"
    return tasks, scope, RANDOM_GENERATOR


def _reproduces(statement: Statement, digraph: Digraph, bounds: DegreeBounds, witness: Dict[str, Any]) -> bool:
    """Re-run the check from scratch on a reported counterexample"""
    hole = witness.get("hole") if statement.per_hole else None
    inst = Instance(digraph, bounds, hole)
    try:
        return any(not o.ok for o in statement.check(inst))
    except PhylolabError:
        return False


class Verifier:
    """Runs one registry statement over a parameter grid"""

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers

    def run(
        self,
        statement_id: str,
        params: VerifyParams,
        sink: Optional[Callable[[ReportRecord], None]] = None,
    ) -> VerificationReport:
        statement = get_statement(statement_id)
        bounds = statement.bounds_for(params)
        if statement.requires:
            problem = statement.requires(bounds)
            if problem:
                raise InvalidParams(f"{statement_id} {problem}; got bounds {bounds}")
        if params.n_min > params.n:
            raise InvalidParams(f"n_min {params.n_min} exceeds n {params.n}")
        tasks, scope, generator = _tasks(statement, params, bounds)
        described = params.describe()
        described.update(i=bounds.i, j=bounds.j)
        report = VerificationReport(statement=statement_id, params=described, scope=scope, generator=generator)
        workers = self.workers or params.workers
        logger.info("verifying %s over %d partitions with %d worker(s)", statement_id, len(tasks), workers)

        offset = 0
        max_omega = 0
        for done, partial in enumerate(self._map(tasks, workers), 1):
            report.instances_checked += partial.instances
            report.hypothesis_fired += partial.fired
            max_omega = max(max_omega, partial.max_omega)
            for position, digraph, witness in partial.failures:
                if not _reproduces(statement, digraph, bounds, witness):
                    logger.warning("discarding unreproducible counterexample %s", digest(digraph))
                    continue
                self._record(report, sink, Counterexample(
                    n=digraph.n, arcs=digraph.arcs(), digest=digest(digraph), witness=witness,
                ), offset + position)
            offset += partial.digraphs
            logger.debug("%s: partition %d/%d done", statement_id, done, len(tasks))

        if statement.converse and params.samples is None:
            for outcome, graph in statement.converse(params, bounds):
                report.instances_checked += 1
                report.hypothesis_fired += outcome.fired
                if not outcome.ok:
                    if not statement.converse.reproduces(graph, bounds):
                        logger.warning("discarding unreproducible converse counterexample %s", graph_digest(graph))
                        continue
                    self._record(report, sink, Counterexample(
                        n=graph.n, arcs=[], digest=graph_digest(graph), witness=outcome.witness,
                    ), None)
            report.scope += "; converse over all graphs on the same vertex counts"
        if statement.tracks_omega:
            report.extras["max_omega"] = max_omega
            report.extras["omega_limit"] = (
                bounds.i * bounds.j if statement_id == "thm_omega_ij" else 3 * bounds.i // 2 + 1
            )
            report.extras["achieved"] = max_omega == report.extras["omega_limit"]
        if statement.construction:
            extras = statement.construction(bounds)
            report.extras.update(extras)
            if extras and not extras["construction"]["holds"]:
                report.verdict = "fail"
            if extras:
                report.scope += f"; construction check with {extras['construction']['family']}"
        if report.counterexamples:
            report.verdict = "fail"
        logger.info("%s: %s after %d instances", statement_id, report.verdict, report.instances_checked)
        return report

    @staticmethod
    def _map(tasks: List[Tuple], workers: int) -> Iterator[PartitionResult]:
        if workers > 1 and len(tasks) > 1:
            with Pool(processes=min(workers, len(tasks))) as pool:
                yield from pool.imap(_run_partition, tasks)
        else:
            for task in tasks:
                yield _run_partition(task)

    @staticmethod
    def _record(report: VerificationReport, sink, example: Counterexample, index: Optional[int]) -> None:
        report.counterexamples.append(example)
        if sink is not None:
            sink(ReportRecord(
                record="counterexample",
                statement=report.statement,
                params=report.params,
                digest=example.digest,
                instance=index,
                verdict="fail",
                witness=dict(example.witness, n=example.n, arcs=[list(a) for a in example.arcs]),
            ))


def verify(statement_id: str, params: VerifyParams, sink=None) -> VerificationReport:
    return Verifier().run(statement_id, params, sink)
