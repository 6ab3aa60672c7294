from typing import Iterator, List, Optional, Tuple

from pydantic import ValidationError

from phylolab.core.config import settings
from phylolab.core.errors import BoundsOutOfScope, InvalidSpec, SizeLimitExceeded
from phylolab.models.bitset import members, size
from phylolab.models.graph import Graph
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.pattern import ForbiddenVerdict, NeighborhoodBoundViolation, PatternSpec, Violation
from phylolab.services.cliques import clique_number
from phylolab.services.core_graphs import induced
from phylolab.services.matching import first_induced_embedding


def pattern(kind: str, l: Optional[int] = None, m: Optional[int] = None, n: Optional[int] = None) -> PatternSpec:
    try:
        return PatternSpec(kind=kind, l=l, m=m, n=n)
    except ValidationError as exc:
        raise InvalidSpec(f"invalid pattern {kind}: {exc.errors()[0]['msg']}") from exc


def _path_edges(k: int) -> List[Tuple[int, int]]:
    return [(t, t + 1) for t in range(k - 1)]


def build_pattern(spec: PatternSpec) -> Graph:
    """Canonical labelling: hub last for fans and wheels, bipartite parts contiguous"""
    kind, l = spec.kind, spec.l
    if kind == "complete":
        return Graph.complete(l)
    if kind == "star":
        return Graph.from_edges(l + 1, [(0, v) for v in range(1, l + 1)])
    if kind == "complete_bipartite":
        m, n = spec.m, spec.n
        return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])
    if kind == "path":
        return Graph.from_edges(l, _path_edges(l))
    if kind == "cycle":
        return Graph.from_edges(l, _path_edges(l) + [(l - 1, 0)])
    if kind == "fan":
        return Graph.from_edges(l + 1, _path_edges(l) + [(t, l) for t in range(l)])
    if kind == "wheel":
        return Graph.from_edges(l + 1, _path_edges(l) + [(l - 1, 0)] + [(t, l) for t in range(l)])
    if kind == "diamond":
        return build_pattern(pattern("fan", l=3))
    raise InvalidSpec(f"unknown pattern kind {kind}")


def contains_induced(g: Graph, p: Graph, cap: Optional[int] = None) -> Optional[List[int]]:
    """Lexicographically smallest induced embedding of P into G, if any"""
    cap = settings.PATTERN_CAP if cap is None else cap
    if p.n > cap:
        raise SizeLimitExceeded("pattern", p.n, cap)
    if p.n > g.n:
        return None
    return first_induced_embedding(g, p)


def _independent_subset(g: Graph, pool: int, k: int) -> Optional[List[int]]:
    chosen: List[int] = []

    def pick(pool: int) -> bool:
        if len(chosen) == k:
            return True
        for v in members(pool):
            if size(pool >> v) < k - len(chosen):
                return False
            chosen.append(v)
            if pick(pool & ~g.adj[v] & ~((1 << (v + 1)) - 1)):
                return True
            chosen.pop()
        return False

    return chosen if pick(pool) else None


def find_star(g: Graph, leaves: int) -> Optional[List[int]]:
    """Induced K_{1,leaves} as [centre, leaves...], lexicographically first"""
    for centre in range(g.n):
        if g.degree(centre) >= leaves:
            found = _independent_subset(g, g.adj[centre], leaves)
            if found is not None:
                return [centre] + found
    return None


def find_induced_stars(g: Graph, leaves: int) -> Iterator[Tuple[int, List[int]]]:
    """Every induced K_{1,leaves} as (centre, sorted leaves)"""
    def grow(chosen: List[int], pool: int) -> Iterator[List[int]]:
        if len(chosen) == leaves:
            yield list(chosen)
            return
        for v in members(pool):
            yield from grow(chosen + [v], pool & ~g.adj[v] & ~((1 << (v + 1)) - 1))

    for centre in range(g.n):
        if g.degree(centre) >= leaves:
            for found in grow([], g.adj[centre]):
                yield centre, found


def find_clique(g: Graph, k: int) -> Optional[List[int]]:
    """Lexicographically first clique on k vertices"""
    chosen: List[int] = []

    def pick(pool: int) -> bool:
        if len(chosen) == k:
            return True
        for v in members(pool):
            if size(pool >> v) < k - len(chosen):
                return False
            chosen.append(v)
            if pick(pool & g.adj[v] & ~((1 << (v + 1)) - 1)):
                return True
            chosen.pop()
        return False

    return chosen if pick((1 << g.n) - 1) else None


def _find_joined(g: Graph, rim: Graph) -> Optional[List[int]]:
    """rim joined with one hub: the hub's neighbourhood must hold an induced rim"""
    best = None
    for hub in range(g.n):
        if g.degree(hub) < rim.n:
            continue
        sub, labels = induced(g, g.adj[hub])
        found = first_induced_embedding(sub, rim)
        if found is not None:
            candidate = [labels[v] for v in found] + [hub]
            if best is None or candidate < best:
                best = candidate
    return best


def find_pattern(g: Graph, spec: PatternSpec, cap: Optional[int] = None) -> Optional[List[int]]:
    """First induced copy of a named pattern, using the fastest search the kind allows"""
    cap = settings.PATTERN_CAP if cap is None else cap
    if spec.kind == "star":
        return find_star(g, spec.l)
    if spec.kind == "complete":
        return find_clique(g, spec.l)
    graph = build_pattern(spec)
    if graph.n > g.n:
        return None
    if graph.n > cap:
        raise SizeLimitExceeded("pattern", graph.n, cap)
    if spec.kind == "fan":
        return _find_joined(g, build_pattern(pattern("path", l=spec.l)))
    if spec.kind == "wheel":
        return _find_joined(g, build_pattern(pattern("cycle", l=spec.l)))
    return first_induced_embedding(g, graph)


def forbidden_patterns(bounds: DegreeBounds) -> List[PatternSpec]:
    """The forbidden induced subgraphs for (i,j) phylogeny graphs, in checking order"""
    i, j = bounds.i, bounds.j
    found = [
        pattern("star", l=j + 2),
        pattern("complete_bipartite", m=j + 1, n=j + 1),
        pattern("fan", l=2 * j + 3),
        pattern("wheel", l=2 * j + 3),
        pattern("complete", l=i * j + 1),
    ]
    if i >= 4 and j == 2:
        found.append(pattern("complete", l=3 * i // 2 + 2))
    return found


def detect_forbidden(g: Graph, bounds: DegreeBounds, cap: Optional[int] = None) -> ForbiddenVerdict:
    if bounds.i < 2 or bounds.j < 2:
        raise BoundsOutOfScope(
            f"bounds {bounds} are outside i >= 2, j >= 2; use the (1,j) or (i,1) characterization"
        )
    cap = settings.PATTERN_CAP if cap is None else cap
    violations = []
    for spec in forbidden_patterns(bounds):
        embedding = find_pattern(g, spec, cap)
        if embedding is not None:
            violations.append(Violation(pattern=spec.name, embedding=embedding))
    return ForbiddenVerdict(violations=violations)


def check_neighborhood_bound(g: Graph, j: int) -> List[NeighborhoodBoundViolation]:
    """Vertices u with |N(u)| > omega(G[N(u)]) * (j + 1)"""
    found = []
    for u in range(g.n):
        k = clique_number(g, within=g.adj[u])
        limit = k * (j + 1)
        if g.degree(u) > limit:
            found.append(NeighborhoodBoundViolation(vertex=u, neighborhood=g.degree(u), clique_size=k, limit=limit))
    return found
