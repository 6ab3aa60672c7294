import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from phylolab.core.errors import HoleTooShort, LemmaCounterexample, NotAHole, PreconditionViolated
from phylolab.models.bitset import bit, from_vertices, members, size
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.chordality import Cycle, Hole, normalize_cycle
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.hole import ChordComponent, HoleContext, StatementReport
from phylolab.services.chordality import find_hole, validate_hole
from phylolab.services.cliques import clique_number, maximal_clique_masks
from phylolab.services.core_graphs import check_bounds, digest, induced, require_acyclic, underlying_graph
from phylolab.services.phylogeny import cared_edges, phylogeny_graph

logger = logging.getLogger(__name__)

HoleLike = Union[Hole, Sequence[int]]


def _sequence(h) -> List[int]:
    return list(h.vertices) if isinstance(h, Cycle) else list(h)


def _checked_hole(d: Digraph, h: HoleLike) -> Hole:
    require_acyclic(d)
    seq = _sequence(h)
    if not validate_hole(underlying_graph(d), seq):
        raise NotAHole(f"{seq} is not a hole of the underlying graph")
    if len(seq) < 5:
        raise HoleTooShort(f"hole {seq} has length {len(seq)}; at least 5 is required")
    return Hole(vertices=normalize_cycle(seq))


def _gamma(d: Digraph, hole: Hole) -> List[int]:
    mask = from_vertices(hole.vertices)
    return sorted(v for v in hole.vertices if size(d.in_adj[v] & mask) == 2)


def gamma_set(d: Digraph, h: HoleLike) -> List[int]:
    """Vertices of H with two in-neighbours inside D_H"""
    return _gamma(d, _checked_hole(d, h))


def _cycle(hole: Hole, gamma: List[int]) -> Cycle:
    kept = [v for v in hole.vertices if v not in gamma]
    return Cycle(vertices=normalize_cycle(kept))


def cycle_from_hole(d: Digraph, h: HoleLike) -> Cycle:
    """The cycle of P(D) left after deleting the gamma vertices from H"""
    hole = _checked_hole(d, h)
    return _cycle(hole, _gamma(d, hole))


def _chords(g: Graph, cycle: Sequence[int]) -> List[Tuple[int, int]]:
    k = len(cycle)
    position = {v: t for t, v in enumerate(cycle)}
    chords = []
    for a in sorted(cycle):
        for b in members(g.adj[a]):
            if b > a and b in position:
                gap = abs(position[a] - position[b])
                if gap not in (1, k - 1):
                    chords.append((a, b))
    return chords


def _chord_components(chords: List[Tuple[int, int]]) -> List[ChordComponent]:
    parent: Dict[int, int] = {}

    def root(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in chords:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = root(a), root(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[int, List[int]] = {}
    for v in sorted(parent):
        groups.setdefault(root(v), []).append(v)
    return [
        ChordComponent(vertices=vs, chords=[c for c in chords if root(c[0]) == r])
        for r, vs in sorted(groups.items())
    ]


def analyze_hole(d: Digraph, h: HoleLike) -> HoleContext:
    hole = _checked_hole(d, h)
    gamma = _gamma(d, hole)
    cycle = _cycle(hole, gamma)
    chords = _chords(phylogeny_graph(d), cycle.vertices)
    return HoleContext(
        digraph=d,
        hole=hole,
        gamma=gamma,
        cycle=cycle,
        chords=chords,
        chord_components=_chord_components(chords),
    )


# Path extension

def _is_section(cycle: List[int], seq: List[int]) -> bool:
    k = len(cycle)
    if not seq or len(seq) > k or seq[0] not in cycle:
        return False
    start = cycle.index(seq[0])
    return any(
        all(seq[t] == cycle[(start + step * t) % k] for t in range(len(seq))) for step in (1, -1)
    )


def _contains_segment(section: List[int], path: List[int]) -> bool:
    for candidate in (section, section[::-1]):
        for s in range(len(candidate) - len(path) + 1):
            if candidate[s:s + len(path)] == path:
                return True
    return False


def _is_induced_path(g: Graph, seq: List[int]) -> bool:
    return all(
        g.has_edge(seq[a], seq[b]) == (b == a + 1)
        for a in range(len(seq))
        for b in range(a + 1, len(seq))
    )


def _completions(g: Graph, path: List[int], pool: int, extra: int) -> Iterator[List[int]]:
    """Chordless continuations of path back to path[0] with exactly `extra` new vertices"""
    head = path[0]
    blocked = 0
    for v in path[1:-1]:
        blocked |= g.adj[v]

    def walk(tip: int, added: List[int], used: int, blocked: int) -> Iterator[List[int]]:
        remaining = extra - len(added)
        for w in members(g.adj[tip] & pool & ~used & ~blocked):
            closes = g.has_edge(w, head)
            if remaining == 1:
                if closes:
                    yield added + [w]
            elif not closes:
                yield from walk(w, added + [w], used | bit(w), blocked | g.adj[tip])

    yield from walk(path[-1], [], 0, blocked)


def extend_path_to_hole(
    g: Graph, c: Union[Cycle, Sequence[int]], p: Sequence[int], q: Optional[Sequence[int]] = None
) -> Hole:
    """Shortest hole of G[V(C)] running through P, lexicographically first on ties.

    Q defaults to P and must be a section of C containing P that is an induced
    path of G. The hole contains a vertex of C off Q.
    """
    cycle = _sequence(c)
    k = len(cycle)
    if k < 4:
        raise PreconditionViolated("cycle-length", f"cycle has length {k}")
    if len(set(cycle)) != k or not all(g.has_edge(cycle[t], cycle[(t + 1) % k]) for t in range(k)):
        raise PreconditionViolated("cycle", f"{cycle} is not a cycle of the graph")
    path = list(p)
    if len(path) < 3:
        raise PreconditionViolated("path-length", "the path needs at least two edges")
    if not _is_section(cycle, path):
        raise PreconditionViolated("path-on-cycle", f"{path} is not a section of the cycle")
    section = list(q) if q is not None else path
    if len(section) >= k or not _is_section(cycle, section):
        raise PreconditionViolated("section", f"{section} is not a proper section of the cycle")
    if not _contains_segment(section, path):
        raise PreconditionViolated("section-contains-path", f"{section} does not contain {path}")
    if not _is_induced_path(g, section):
        raise PreconditionViolated("section-induced", f"{section} is not an induced path")
    interior = set(path[1:-1])
    for a, b in _chords(g, cycle):
        if a in interior or b in interior:
            raise PreconditionViolated("interior-chord", f"chord {a}{b} meets the path interior")

    pool = from_vertices(cycle) & ~from_vertices(path)
    off_section = from_vertices(cycle) & ~from_vertices(section)
    for extra in range(1, k - len(path) + 1):
        for added in _completions(g, path, pool, extra):
            if from_vertices(added) & off_section:
                return Hole(vertices=normalize_cycle(path + added))
    logger.warning("no hole extends %s inside cycle %s", path, cycle)
    raise LemmaCounterexample(f"no hole of G[V(C)] extends {path} past the section {section}")


# Statement checks

def _report(statement: str, instance: str, fired: bool, ok: bool = True, witness: Optional[dict] = None) -> StatementReport:
    if not fired:
        return StatementReport(statement=statement, instance=instance, verdict="vacuous-pass")
    return StatementReport(statement=statement, instance=instance, verdict="pass" if ok else "fail", witness=witness)


def _hole_in(pg: Graph, mask: int) -> Optional[List[int]]:
    sub, labels = induced(pg, mask)
    hole = find_hole(sub)
    if hole is None:
        return None
    return normalize_cycle([labels[v] for v in hole.vertices])


def check_hole_statements(d: Digraph, h: HoleLike, bounds: DegreeBounds) -> List[StatementReport]:
    """Check every statement about the hole machinery on one (D, H) pair"""
    verdict = check_bounds(d, bounds)
    if not verdict.passed:
        raise PreconditionViolated("bounds", f"digraph violates {bounds}: {verdict.violations[0].model_dump()}")
    ctx = analyze_hole(d, h)
    pg = phylogeny_graph(d)
    care = cared_edges(d).as_dict()
    hole, cycle, gamma, chords = ctx.hole.vertices, ctx.cycle.vertices, ctx.gamma, ctx.chords
    l, c, g_count = len(hole), len(cycle), len(gamma)
    hmask, cmask = from_vertices(hole), from_vertices(cycle)
    instance = f"{digest(d)}:{'-'.join(map(str, hole))}"
    i, j2 = bounds.i, bounds.j <= 2
    two_out = [v for v in cycle if size(d.out_adj[v] & hmask) == 2]
    chord_incident = {v for chord in chords for v in chord}
    omega_c = clique_number(pg, within=cmask)
    reports = []

    # cycle length, out-neighbours on H, two-out count, chords cared for off H
    failure = None
    if not l - l // 2 <= c <= l - 1:
        failure = {"part": 1, "cycle_length": c, "hole_length": l}
    elif any(not d.out_adj[v] & hmask for v in cycle):
        failure = {"part": 2, "vertex": next(v for v in cycle if not d.out_adj[v] & hmask)}
    elif len(two_out) != g_count:
        failure = {"part": 3, "two_out": two_out, "gamma": gamma}
    else:
        for a, b in chords:
            caring = care.get((a, b), [])
            if not caring or any(hmask >> w & 1 for w in caring):
                failure = {"part": 4, "chord": [a, b], "caring": caring}
                break
    reports.append(_report("lem_2_1", instance, True, failure is None, failure))

    # unique caring vertex, its exclusivity, and common prey per chord component
    failure = None
    if j2 and chords:
        for a, b in chords:
            caring = care.get((a, b), [])
            if len(caring) != 1:
                failure = {"part": 1, "chord": [a, b], "caring": caring}
                break
            w = caring[0]
            lonely = [x for x in (a, b) if d.out_adj[x] & ~hmask != bit(w)]
            if lonely:
                failure = {"part": 2, "chord": [a, b], "caring": w, "vertex": lonely[0]}
                break
        if failure is None:
            for comp in ctx.chord_components:
                common = ~0
                for v in comp.vertices:
                    common &= d.out_adj[v]
                if not common or not pg.is_clique(from_vertices(comp.vertices)):
                    failure = {"part": 3, "component": comp.vertices}
                    break
    reports.append(_report("prop_2_2", instance, j2 and bool(chords), failure is None, failure))

    offenders = [v for v in two_out if v in chord_incident]
    reports.append(_report("cor_2_3", instance, j2 and bool(chords), not offenders, {"vertices": offenders} if offenders else None))

    fired = c >= 5 and omega_c >= 4
    failure = None
    if fired:
        component_of = {v: n for n, comp in enumerate(ctx.chord_components) for v in comp.vertices}
        sub, labels = induced(pg, cmask)
        for clique in maximal_clique_masks(sub):
            if size(clique) != omega_c:
                continue
            vertices = [labels[t] for t in members(clique)]
            home = component_of.get(vertices[0])
            if home is None or any(component_of.get(v) != home for v in vertices):
                failure = {"clique": vertices}
                break
    reports.append(_report("lem_2_6", instance, fired, failure is None, failure))

    fired = j2 and i >= 3
    reports.append(_report("lem_2_7", instance, fired, omega_c <= i, {"omega": omega_c, "i": i}))

    fired = j2 and c >= 4 and omega_c <= (c - 1) // 2
    reports.append(_hole_report("thm_2_5", instance, fired, pg, cmask))

    fired = j2 and i >= 3 and c >= 4 and (l - g_count >= 2 * i + 1 or l < 3 * g_count)
    reports.append(_hole_report("thm_2_8", instance, fired, pg, cmask))

    reports.append(_hole_report("thm_1_1", instance, j2 and l >= 3 * i + 1, pg, hmask))
    reports.append(_hole_report("thm_1_2", instance, j2 and i <= 2 and l >= 7, pg, hmask))
    return reports


def _hole_report(statement: str, instance: str, fired: bool, pg: Graph, mask: int) -> StatementReport:
    if not fired:
        return _report(statement, instance, False)
    found = _hole_in(pg, mask)
    if found is None:
        return _report(statement, instance, True, False, {"vertices": list(members(mask))})
    return _report(statement, instance, True, True, {"hole": found})
