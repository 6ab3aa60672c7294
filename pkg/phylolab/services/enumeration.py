from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from phylolab.core.config import settings
from phylolab.core.errors import CapExceeded, InvalidParams
from phylolab.models.bitset import bit, size
from phylolab.models.graph import Digraph
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.verification import EnumSpec

RANDOM_GENERATOR = "numpy-pcg64/shuffled-pairs/bernoulli-p/bounds-rejection"
LONG_HOLE_GENERATOR = "numpy-pcg64/planted-hole/off-hole-decoration/bounds-rejection"


def staircase_pairs(n: int) -> List[Tuple[int, int]]:
    """Candidate arcs (u, v), u < v, in lexicographic order"""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def enumerate_staircase(n: int, bounds: DegreeBounds, prefix: Sequence[bool] = ()) -> Iterator[Digraph]:
    """Bounded arc subsets of the staircase, arcs decided in lexicographic order.

    prefix fixes the first decisions (False = arc absent); omitting arcs is
    explored before adding them, so prefixes in product order partition the
    output without reordering it.
    """
    pairs = staircase_pairs(n)
    out_adj = [0] * n
    indegree = [0] * n
    outdegree = [0] * n
    i, j = bounds.i, bounds.j

    def decide(t: int) -> Iterator[Digraph]:
        if t == len(pairs):
            yield Digraph(n, out_adj)
            return
        u, v = pairs[t]
        for take in ((prefix[t],) if t < len(prefix) else (False, True)):
            if not take:
                yield from decide(t + 1)
            elif outdegree[u] < j and indegree[v] < i:
                out_adj[u] |= bit(v)
                outdegree[u] += 1
                indegree[v] += 1
                yield from decide(t + 1)
                out_adj[u] &= ~bit(v)
                outdegree[u] -= 1
                indegree[v] -= 1

    yield from decide(0)


def staircase_prefixes(n: int, depth: Optional[int] = None) -> List[Tuple[bool, ...]]:
    depth = settings.PARTITION_DEPTH if depth is None else depth
    return list(product((False, True), repeat=min(depth, len(staircase_pairs(n)))))


def random_dag(n: int, bounds: DegreeBounds, seed: int, index: int, p: Optional[float] = None) -> Digraph:
    """Sample `index` of stream `seed`: arcs low to high, visited in shuffled order,
    each kept with probability p unless it would break a bound"""
    p = settings.ARC_PROBABILITY if p is None else p
    rng = np.random.default_rng([seed, index])
    pairs = staircase_pairs(n)
    order = rng.permutation(len(pairs))
    draws = rng.random(len(pairs))
    out_adj = [0] * n
    indegree = [0] * n
    for t, k in enumerate(order):
        u, v = pairs[k]
        if draws[t] < p and size(out_adj[u]) < bounds.j and indegree[v] < bounds.i:
            out_adj[u] |= bit(v)
            indegree[v] += 1
    return Digraph(n, out_adj)


def long_hole_dag(
    max_n: int, bounds: DegreeBounds, seed: int, index: int, p: Optional[float] = None
) -> Tuple[Digraph, List[int]]:
    """Bounded DAG whose underlying graph has the planted hole 0, 1, ..., l-1.

    l is drawn from [5, min(max_n, 3i + 3)]; the remaining vertices and all arcs
    touching them are random, and no arc joins two hole vertices.
    """
    if max_n < 5:
        raise InvalidParams("planting a hole needs at least 5 vertices")
    if bounds.i < 2 or bounds.j < 2:
        raise InvalidParams(f"an oriented hole needs bounds of at least (2,2), got {bounds}")
    p = settings.ARC_PROBABILITY if p is None else p
    rng = np.random.default_rng([seed, index, 1])
    l = int(rng.integers(5, max(5, min(max_n, 3 * bounds.i + 3)) + 1))
    n = l + int(rng.integers(0, max_n - l + 1))
    rank = [int(r) for r in rng.permutation(n)]
    out_adj = [0] * n
    indegree = [0] * n
    for a in range(l):
        b = (a + 1) % l
        u, v = (a, b) if rank[a] < rank[b] else (b, a)
        out_adj[u] |= bit(v)
        indegree[v] += 1
    pairs = [(u, v) for u in range(n) for v in range(n) if rank[u] < rank[v] and (u >= l or v >= l)]
    order = rng.permutation(len(pairs))
    draws = rng.random(len(pairs))
    for t, k in enumerate(order):
        u, v = pairs[k]
        if draws[t] < p and size(out_adj[u]) < bounds.j and indegree[v] < bounds.i:
            out_adj[u] |= bit(v)
            indegree[v] += 1
    return Digraph(n, out_adj), list(range(l))


def enumerate_dags(spec: EnumSpec, cap: Optional[int] = None) -> Iterator[Digraph]:
    if spec.mode == "staircase":
        cap = settings.ENUM_CAP if cap is None else cap
        if spec.n > cap:
            raise CapExceeded(f"staircase enumeration on {spec.n} vertices exceeds the cap {cap}")
        yield from enumerate_staircase(spec.n, spec.bounds)
        return
    for index in range(spec.samples):
        yield random_dag(spec.n, spec.bounds, spec.seed, index, spec.p)


def count_dags(spec: EnumSpec, cap: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_dags(spec, cap))


def count_arc_subsets(n: int, bounds: DegreeBounds) -> int:
    """Brute-force count of bounded staircase arc subsets"""
    pairs = staircase_pairs(n)
    total = 0
    for chosen in range(1 << len(pairs)):
        indegree = [0] * n
        outdegree = [0] * n
        for t, (u, v) in enumerate(pairs):
            if chosen >> t & 1:
                outdegree[u] += 1
                indegree[v] += 1
        if max(indegree, default=0) <= bounds.i and max(outdegree, default=0) <= bounds.j:
            total += 1
    return total
