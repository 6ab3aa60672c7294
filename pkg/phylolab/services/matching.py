"""Backtracking induced-subgraph matcher shared by isomorphism and pattern search."""
from typing import Iterator, List, Optional, Sequence

from phylolab.models.bitset import bit, members, size
from phylolab.models.graph import Graph


def induced_embeddings(
    host: Graph,
    pattern: Graph,
    candidates: Optional[Sequence[int]] = None,
) -> Iterator[List[int]]:
    """Induced embeddings of pattern into host in lexicographic order.

    Pattern vertices are placed in label order and host vertices are tried in
    increasing order, so the first embedding yielded is the lexicographically
    smallest map. candidates[p] optionally restricts the images of p.
    """
    k = pattern.n
    if k > host.n:
        return
    everyone = (1 << host.n) - 1
    allowed = list(candidates) if candidates is not None else [everyone] * k
    for p in range(k):
        need = size(pattern.adj[p])
        allowed[p] &= sum(bit(v) for v in range(host.n) if size(host.adj[v]) >= need)
    image = [0] * k

    def extend(p: int, used: int) -> Iterator[List[int]]:
        if p == k:
            yield list(image)
            return
        pool = allowed[p] & ~used
        for q in range(p):
            if pattern.adj[p] >> q & 1:
                pool &= host.adj[image[q]]
            else:
                pool &= ~host.adj[image[q]]
            if not pool:
                return
        for v in members(pool):
            image[p] = v
            yield from extend(p + 1, used | bit(v))

    yield from extend(0, 0)


def first_induced_embedding(
    host: Graph, pattern: Graph, candidates: Optional[Sequence[int]] = None
) -> Optional[List[int]]:
    return next(induced_embeddings(host, pattern, candidates), None)


def is_induced_embedding(host: Graph, pattern: Graph, embedding: Sequence[int]) -> bool:
    if len(embedding) != pattern.n or len(set(embedding)) != pattern.n:
        return False
    if any(not 0 <= v < host.n for v in embedding):
        return False
    return all(
        pattern.has_edge(p, q) == host.has_edge(embedding[p], embedding[q])
        for p in range(pattern.n)
        for q in range(p + 1, pattern.n)
    )
