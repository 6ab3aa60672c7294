from typing import Iterable, List, Sequence, Tuple

from phylolab.core.errors import InvalidGraph, OutOfRange
from phylolab.models.bitset import bit, members, size


def _check_label(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise OutOfRange(f"vertex {v} outside 0..{n - 1}")


class Graph:
    """Simple undirected graph on 0..n-1 with bitset adjacency"""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if len(adj) != n:
            raise InvalidGraph(f"expected {n} adjacency sets, got {len(adj)}")
        limit = (1 << n) - 1
        for v, nbrs in enumerate(adj):
            if nbrs & ~limit:
                raise OutOfRange(f"neighbour of {v} outside 0..{n - 1}")
            if nbrs >> v & 1:
                raise InvalidGraph(f"self-loop at {v}")
            for u in members(nbrs):
                if not adj[u] >> v & 1:
                    raise InvalidGraph(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            _check_label(u, n)
            _check_label(v, n)
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        everyone = (1 << n) - 1
        return cls(n, [everyone ^ bit(v) for v in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(members(self.adj[v]))

    def degree(self, v: int) -> int:
        return size(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(size(a) for a in self.adj) // 2

    def is_clique(self, mask: int) -> bool:
        return all(mask & ~bit(v) & ~self.adj[v] == 0 for v in members(mask))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(("graph", self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class Digraph:
    """Simple digraph on 0..n-1; in_adj is derived from out_adj"""

    __slots__ = ("n", "out_adj", "in_adj")

    def __init__(self, n: int, out_adj: Sequence[int]):
        if len(out_adj) != n:
            raise InvalidGraph(f"expected {n} out-neighbour sets, got {len(out_adj)}")
        limit = (1 << n) - 1
        in_adj = [0] * n
        for u, outs in enumerate(out_adj):
            if outs & ~limit:
                raise OutOfRange(f"out-neighbour of {u} outside 0..{n - 1}")
            if outs >> u & 1:
                raise InvalidGraph(f"self-loop at {u}")
            for v in members(outs):
                in_adj[v] |= bit(u)
        for u in range(n):
            both = out_adj[u] & in_adj[u]
            if both:
                v = next(members(both))
                raise InvalidGraph(f"antiparallel arcs between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out_adj", tuple(out_adj))
        object.__setattr__(self, "in_adj", tuple(in_adj))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __reduce__(self):
        return (Digraph, (self.n, self.out_adj))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> "Digraph":
        out_adj = [0] * n
        for u, v in arcs:
            _check_label(u, n)
            _check_label(v, n)
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            out_adj[u] |= bit(v)
        return cls(n, out_adj)

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, [0] * n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def out_neighbors(self, v: int) -> List[int]:
        return list(members(self.out_adj[v]))

    def in_neighbors(self, v: int) -> List[int]:
        return list(members(self.in_adj[v]))

    def out_degree(self, v: int) -> int:
        return size(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return size(self.in_adj[v])

    def arcs(self) -> List[Tuple[int, int]]:
        """Arcs in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in members(self.out_adj[u])]

    def arc_count(self) -> int:
        return sum(size(a) for a in self.out_adj)

    def sources(self) -> List[int]:
        return [v for v in range(self.n) if not self.in_adj[v]]

    def with_vertex(self, out_mask: int) -> "Digraph":
        """Append vertex n whose out-neighbours are out_mask"""
        return Digraph(self.n + 1, list(self.out_adj) + [out_mask])

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        return hash(("digraph", self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"
