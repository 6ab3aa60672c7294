from typing import List

from phylolab.models.bitset import bit, members
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.graph import CaredEdge, CaredEdgeMap
from phylolab.services.core_graphs import require_acyclic


def _competition_adjacency(d: Digraph) -> List[int]:
    adj = [0] * d.n
    for w in range(d.n):
        prey_of = d.in_adj[w]
        for u in members(prey_of):
            adj[u] |= prey_of & ~bit(u)
    return adj


def competition_graph(d: Digraph) -> Graph:
    """C(D): u and v adjacent when they share an out-neighbour"""
    require_acyclic(d)
    return Graph(d.n, _competition_adjacency(d))


def phylogeny_graph(d: Digraph) -> Graph:
    """P(D) = U(D) + C(D), also known as the moral graph"""
    require_acyclic(d)
    competition = _competition_adjacency(d)
    return Graph(d.n, [d.out_adj[v] | d.in_adj[v] | competition[v] for v in range(d.n)])


def cared_edges(d: Digraph) -> CaredEdgeMap:
    """Edges of C(D) not in U(D), each with all of its caring vertices"""
    require_acyclic(d)
    entries = []
    for u in range(d.n):
        arcs_at_u = d.out_adj[u] | d.in_adj[u]
        for v in members(_competition_adjacency_row(d, u) & ~arcs_at_u):
            if v > u:
                caring = list(members(d.out_adj[u] & d.out_adj[v]))
                entries.append(CaredEdge(u=u, v=v, caring=caring))
    return CaredEdgeMap(entries=entries)


def _competition_adjacency_row(d: Digraph, u: int) -> int:
    row = 0
    for w in members(d.out_adj[u]):
        row |= d.in_adj[w]
    return row & ~bit(u)
