"""Search for a bounded DAG whose phylogeny graph is a given graph"""
import logging
from typing import List, Optional

from phylolab.core.config import settings
from phylolab.core.errors import CapExceeded
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.graph import DegreeBounds
from phylolab.services.core_graphs import relabel
from phylolab.services.enumeration import enumerate_staircase
from phylolab.services.forbidden import contains_induced
from phylolab.services.isomorphism import graph_invariant, graphs_isomorphic
from phylolab.services.phylogeny import phylogeny_graph

logger = logging.getLogger(__name__)


def _placing(embedding: List[int], total: int) -> List[int]:
    """Relabelling that sends embedding[v] to v and the hidden vertices after them, in order"""
    new_label = [-1] * total
    for v, host in enumerate(embedding):
        new_label[host] = v
    hidden = len(embedding)
    for host in range(total):
        if new_label[host] < 0:
            new_label[host] = hidden
            hidden += 1
    return new_label


def realize(g: Graph, bounds: DegreeBounds, extra: int = 0, cap: Optional[int] = None) -> Optional[Digraph]:
    """(i,j) digraph D with P(D) = G on labels 0..|G|-1, or None.

    With extra > 0, D may carry up to extra hidden vertices labelled |G|, |G|+1, ...
    and only P(D)[0..|G|-1] has to equal G.
    """
    cap = settings.ENUM_CAP if cap is None else cap
    if g.n + extra > cap:
        raise CapExceeded(f"realizing a graph on {g.n} vertices with {extra} hidden exceeds the cap {cap}")
    if extra == 0:
        return _realize_exact(g, bounds)
    for total in range(g.n, g.n + extra + 1):
        for d in enumerate_staircase(total, bounds):
            embedding = contains_induced(phylogeny_graph(d), g, cap=max(cap, g.n))
            if embedding is not None:
                logger.debug("realized %r with %d hidden vertices", g, total - g.n)
                return relabel(d, _placing(embedding, total))
    return None


def _realize_exact(g: Graph, bounds: DegreeBounds) -> Optional[Digraph]:
    target = graph_invariant(g)
    for d in enumerate_staircase(g.n, bounds):
        pg = phylogeny_graph(d)
        if graph_invariant(pg) != target:
            continue
        found = graphs_isomorphic(g, pg)
        if found.isomorphic:
            return relabel(d, _placing(found.mapping, g.n))
    return None
