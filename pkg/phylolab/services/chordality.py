from collections import deque
from typing import Iterator, List, Optional, Sequence, Tuple

from phylolab.models.bitset import bit, from_vertices, members
from phylolab.models.graph import Graph
from phylolab.schemas.chordality import ChordalityCertificate, GraphClassFlags, Hole, normalize_cycle
from phylolab.services.cliques import clique_graph, clique_number


def mcs_order(g: Graph) -> List[int]:
    """Maximum cardinality search visit order, lowest label on ties"""
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= bit(v)
        for u in members(g.adj[v] & ~visited):
            weight[u] += 1
    return order


def peo_violation(g: Graph, order: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    """First (v, x, y) with x, y later neighbours of v that are not adjacent"""
    later = from_vertices(order)
    for v in order:
        later &= ~bit(v)
        nbrs = g.adj[v] & later
        for x in members(nbrs):
            missing = nbrs & ~g.adj[x] & ~bit(x)
            if missing >> x:
                return v, x, next(members(missing >> (x + 1) << (x + 1)))
    return None


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    return peo_violation(g, order) is None


def validate_hole(g: Graph, vertices: Sequence[int]) -> bool:
    k = len(vertices)
    if k < 4 or len(set(vertices)) != k or any(not 0 <= v < g.n for v in vertices):
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if g.has_edge(vertices[a], vertices[b]) != consecutive:
                return False
    return True


def shortest_path(g: Graph, source: int, target: int, allowed: int) -> Optional[List[int]]:
    """BFS inside the allowed vertex set; neighbours scanned in label order"""
    parent = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            path = [u]
            while path[-1] != source:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in members(g.adj[u] & allowed):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def _hole_through(g: Graph, v: int, x: int, y: int) -> Optional[List[int]]:
    allowed = ((1 << g.n) - 1) & ~(g.adj[v] | bit(v)) | bit(x) | bit(y)
    path = shortest_path(g, x, y, allowed)
    if path is None:
        return None
    return [v] + path


def _non_adjacent_pairs(g: Graph, mask: int) -> Iterator[Tuple[int, int]]:
    for x in members(mask):
        for y in members(mask & ~g.adj[x] & ~((1 << (x + 1)) - 1)):
            yield x, y


def _extract_hole(g: Graph, order: Sequence[int], failing: int) -> List[int]:
    position = {v: t for t, v in enumerate(order)}
    later = sum(bit(u) for u in range(g.n) if position[u] > position[failing])
    for x, y in _non_adjacent_pairs(g, g.adj[failing] & later):
        cycle = _hole_through(g, failing, x, y)
        if cycle:
            return cycle
    # every hole passes through some vertex with two non-adjacent neighbours
    for v in range(g.n):
        for x, y in _non_adjacent_pairs(g, g.adj[v]):
            cycle = _hole_through(g, v, x, y)
            if cycle:
                return cycle
    raise AssertionError("non-chordal graph without a hole")


def is_chordal(g: Graph) -> ChordalityCertificate:
    peo = mcs_order(g)[::-1]
    violation = peo_violation(g, peo)
    if violation is None:
        return ChordalityCertificate(verdict="chordal", peo=peo)
    hole = _extract_hole(g, peo, violation[0])
    return ChordalityCertificate(verdict="non-chordal", hole=Hole(vertices=normalize_cycle(hole)))


def find_hole(g: Graph) -> Optional[Hole]:
    return is_chordal(g).hole


def enumerate_holes(g: Graph, min_length: int = 4, limit: Optional[int] = None) -> Iterator[Hole]:
    """Every hole exactly once, normalized, in a deterministic order"""
    emitted = 0
    everyone = (1 << g.n) - 1
    adj = g.adj
    for s in range(g.n):
        above = everyone & ~((1 << (s + 1)) - 1)
        stack = []
        for a in members(adj[s] & above):
            stack.append(([s, a], bit(s) | bit(a), 0))
            while stack:
                path, used, blocked = stack.pop()
                tip = path[-1]
                options = adj[tip] & above & ~used & ~blocked
                # blocked holds neighbours of interior vertices
                branches = []
                for w in members(options):
                    if adj[s] >> w & 1:
                        if len(path) >= 3 and path[1] < w and len(path) + 1 >= min_length:
                            emitted += 1
                            yield Hole(vertices=path + [w])
                            if limit is not None and emitted >= limit:
                                return
                        continue
                    interior = blocked | (adj[tip] if len(path) >= 2 else 0)
                    branches.append((path + [w], used | bit(w), interior))
                stack.extend(reversed(branches))


def _is_forest(g: Graph) -> bool:
    seen = 0
    components = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        components += 1
        frontier = bit(v)
        seen |= frontier
        while frontier:
            grow = 0
            for u in members(frontier):
                grow |= g.adj[u]
            frontier = grow & ~seen
            seen |= frontier
    return g.edge_count() == g.n - components


def _is_diamond_free(g: Graph) -> bool:
    return all(g.is_clique(g.adj[u] & g.adj[v]) for u, v in g.edges())


def class_predicates(g: Graph) -> GraphClassFlags:
    return GraphClassFlags(
        is_forest=_is_forest(g),
        is_diamond_free=_is_diamond_free(g),
        max_degree=max((g.degree(v) for v in range(g.n)), default=0),
        is_chordal=is_chordal(g).chordal,
        omega=clique_number(g),
        clique_graph_is_forest=_is_forest(clique_graph(g)),
    )
