from typing import List, Optional

from phylolab.core.config import settings
from phylolab.core.errors import SizeLimitExceeded
from phylolab.models.bitset import bit, members, size
from phylolab.models.graph import Graph
from phylolab.schemas.chordality import CliqueReport


def _check_cap(g: Graph, cap: Optional[int]) -> None:
    cap = settings.CLIQUE_CAP if cap is None else cap
    if g.n > cap:
        raise SizeLimitExceeded("clique enumeration", g.n, cap)


def maximal_clique_masks(g: Graph, cap: Optional[int] = None) -> List[int]:
    """Bron-Kerbosch with Tomita pivoting"""
    _check_cap(g, cap)
    if g.n == 0:
        return []
    adj = g.adj
    found: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(members(p | x), key=lambda u: size(p & adj[u]))
        for v in members(p & ~adj[pivot]):
            expand(r | bit(v), p & adj[v], x & adj[v])
            p &= ~bit(v)
            x |= bit(v)

    expand(0, (1 << g.n) - 1, 0)
    return sorted(found, key=lambda m: list(members(m)))


def maximal_cliques(g: Graph, cap: Optional[int] = None) -> CliqueReport:
    cliques = [list(members(m)) for m in maximal_clique_masks(g, cap)]
    return CliqueReport(cliques=cliques, omega=max((len(c) for c in cliques), default=0))


def max_clique(g: Graph, within: Optional[int] = None) -> List[int]:
    """Lexicographically first maximum clique of G[within]"""
    adj = g.adj
    best = [0]

    def expand(r: int, p: int) -> None:
        if not p:
            if size(r) > size(best[0]):
                best[0] = r
            return
        for v in members(p):
            if size(r) + size(p) <= size(best[0]):
                return
            expand(r | bit(v), p & adj[v])
            p &= ~bit(v)

    pool = (1 << g.n) - 1 if within is None else within
    expand(0, pool)
    return list(members(best[0]))


def clique_number(g: Graph, within: Optional[int] = None) -> int:
    return len(max_clique(g, within))


def clique_graph(g: Graph, cap: Optional[int] = None) -> Graph:
    """K(G): one vertex per maximal clique, adjacent when the cliques meet"""
    cliques = maximal_clique_masks(g, cap)
    adj = [
        sum(bit(b) for b, other in enumerate(cliques) if b != a and other & mine)
        for a, mine in enumerate(cliques)
    ]
    return Graph(len(cliques), adj)
