import hashlib
import heapq
from typing import Iterable, List, Tuple, TypeVar, Union

from phylolab.core.errors import CyclicInput, OutOfRange
from phylolab.models.bitset import bit, from_vertices, members, size
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.graph import BoundsCheck, BoundsViolation, DegreeBounds

G = TypeVar("G", Graph, Digraph)


def underlying_graph(d: Digraph) -> Graph:
    """U(D): arcs with their directions erased"""
    return Graph(d.n, [d.out_adj[v] | d.in_adj[v] for v in range(d.n)])


def topological_order(d: Digraph) -> List[int]:
    """Kahn's algorithm, smallest available label first"""
    indegree = [size(d.in_adj[v]) for v in range(d.n)]
    ready = [v for v in range(d.n) if indegree[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in members(d.out_adj[u]):
            indegree[v] -= 1
            if indegree[v] == 0:
                heapq.heappush(ready, v)
    if len(order) < d.n:
        placed = from_vertices(order)
        raise CyclicInput(_directed_cycle(d, ((1 << d.n) - 1) & ~placed))
    return order


def _directed_cycle(d: Digraph, remaining: int) -> List[int]:
    # every vertex left after Kahn's algorithm has an in-neighbour that is also left
    walk = [next(members(remaining))]
    seen = {walk[0]: 0}
    while True:
        prev = next(members(d.in_adj[walk[-1]] & remaining))
        if prev in seen:
            backward = walk[seen[prev]:]
            break
        seen[prev] = len(walk)
        walk.append(prev)
    forward = backward[::-1]
    start = forward.index(min(forward))
    cycle = forward[start:] + forward[:start]
    return cycle + [cycle[0]]


def require_acyclic(d: Digraph) -> None:
    topological_order(d)


def is_acyclic(d: Digraph) -> bool:
    try:
        topological_order(d)
    except CyclicInput:
        return False
    return True


def _compress(mask: int, keep: List[int]) -> int:
    out = 0
    for new, old in enumerate(keep):
        if mask >> old & 1:
            out |= bit(new)
    return out


def induced(g: G, vertices: Union[int, Iterable[int]]) -> Tuple[G, List[int]]:
    """Subgraph induced by the vertices, relabelled in increasing order.

    Returns the subgraph and the label map: labels[new] == old.
    """
    if isinstance(vertices, int):
        if vertices >> g.n:
            raise OutOfRange(f"vertex set reaches past {g.n - 1}")
        keep = list(members(vertices))
    else:
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < g.n:
                raise OutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    if isinstance(g, Digraph):
        sub = Digraph(len(keep), [_compress(g.out_adj[v], keep) for v in keep])
    else:
        sub = Graph(len(keep), [_compress(g.adj[v], keep) for v in keep])
    return sub, keep


def check_bounds(d: Digraph, bounds: DegreeBounds) -> BoundsCheck:
    violations = []
    for v in range(d.n):
        indegree, outdegree = d.in_degree(v), d.out_degree(v)
        if indegree > bounds.i:
            violations.append(BoundsViolation(vertex=v, bound="indegree", degree=indegree, limit=bounds.i))
        if outdegree > bounds.j:
            violations.append(BoundsViolation(vertex=v, bound="outdegree", degree=outdegree, limit=bounds.j))
    return BoundsCheck(passed=not violations, violations=violations)


def degree_bounds_of(d: Digraph) -> DegreeBounds:
    """Smallest bounds the digraph satisfies"""
    i = max((d.in_degree(v) for v in range(d.n)), default=1)
    j = max((d.out_degree(v) for v in range(d.n)), default=1)
    return DegreeBounds(i=max(i, 1), j=max(j, 1))


def digest(d: Digraph) -> str:
    """Stable 64-bit identifier of a labelled digraph"""
    text = f"{d.n}:" + ",".join(f"{u}-{v}" for u, v in d.arcs())
    return hashlib.blake2b(text.encode("ascii"), digest_size=8).hexdigest()


def graph_digest(g: Graph) -> str:
    text = f"g{g.n}:" + ",".join(f"{u}-{v}" for u, v in g.edges())
    return hashlib.blake2b(text.encode("ascii"), digest_size=8).hexdigest()


def relabel(d: Digraph, new_label: List[int]) -> Digraph:
    """Digraph with vertex v renamed new_label[v]"""
    return Digraph.from_arcs(d.n, [(new_label[u], new_label[v]) for u, v in d.arcs()])
