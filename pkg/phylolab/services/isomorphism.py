from typing import Dict, List, Optional, Tuple

from phylolab.core.config import settings
from phylolab.core.errors import SizeLimitExceeded
from phylolab.models.bitset import bit, members
from phylolab.models.graph import Graph
from phylolab.schemas.graph import IsomorphismResult
from phylolab.services.matching import first_induced_embedding


def _refine(adj: List[int]) -> List[int]:
    """Colour refinement starting from degrees; colours are comparable within one call"""
    colours = [bin(a).count("1") for a in adj]
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[u] for u in members(adj[v]))))
            for v in range(len(adj))
        ]
        palette: Dict[tuple, int] = {s: c for c, s in enumerate(sorted(set(signatures)))}
        refined = [palette[s] for s in signatures]
        if len(palette) == len(set(colours)):
            return refined
        colours = refined


def graphs_isomorphic(g1: Graph, g2: Graph, cap: Optional[int] = None) -> IsomorphismResult:
    """Degree refinement on the disjoint union, then backtracking within colour classes"""
    cap = settings.ISOMORPHISM_CAP if cap is None else cap
    for g in (g1, g2):
        if g.n > cap:
            raise SizeLimitExceeded("isomorphism test", g.n, cap)
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return IsomorphismResult(isomorphic=False)
    n = g1.n
    union = list(g1.adj) + [a << n for a in g2.adj]
    colours = _refine(union)
    left, right = colours[:n], colours[n:]
    if sorted(left) != sorted(right):
        return IsomorphismResult(isomorphic=False)
    candidates = [sum(bit(w) for w in range(n) if right[w] == left[v]) for v in range(n)]
    mapping = first_induced_embedding(g2, g1, candidates)
    if mapping is None:
        return IsomorphismResult(isomorphic=False)
    return IsomorphismResult(isomorphic=True, mapping=mapping)


def graph_invariant(g: Graph) -> Tuple:
    """Isomorphism-invariant bucket key"""
    degrees = [bin(a).count("1") for a in g.adj]
    profile = sorted(
        (degrees[v], tuple(sorted(degrees[u] for u in members(g.adj[v])))) for v in range(g.n)
    )
    return (g.n, g.edge_count(), tuple(profile))
