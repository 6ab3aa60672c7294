"""Shared fixtures and oracle helpers for the phylolab test-suite"""
from typing import List, Tuple

import networkx as nx
import pytest
from hypothesis import strategies as st

from phylolab.models.graph import Digraph, Graph
from phylolab.services.constructions import construct


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def to_nx_digraph(d: Digraph) -> nx.DiGraph:
    out = nx.DiGraph()
    out.add_nodes_from(range(d.n))
    out.add_edges_from(d.arcs())
    return out


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 1) -> Graph:
    """Labelled graphs on min_n..max_n vertices, any edge set"""
    n = draw(st.integers(min_n, max_n))
    pairs = _pairs(n)
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, chosen in zip(pairs, keep) if chosen])


@st.composite
def staircase_dags(draw, max_n: int = 7, min_n: int = 1) -> Digraph:
    """DAGs whose arcs all point from a lower to a higher label"""
    n = draw(st.integers(min_n, max_n))
    pairs = _pairs(n)
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_arcs(n, [a for a, chosen in zip(pairs, keep) if chosen])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(t, (t + 1) % n) for t in range(n)])


@pytest.fixture
def clique22():
    """Five-vertex (2,2) digraph on A, B, C, E, X whose phylogeny graph holds K_4"""
    return construct("clique_22")


@pytest.fixture
def hole3i_2():
    return construct("hole3i", 2)


@pytest.fixture
def hole3i_3():
    return construct("hole3i", 3)
