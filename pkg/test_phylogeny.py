"""Tests for competition graphs, phylogeny graphs and cared edges"""
import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import staircase_dags, to_nx, to_nx_digraph
from phylolab.core.errors import CyclicInput
from phylolab.models.bitset import from_vertices
from phylolab.models.graph import Digraph
from phylolab.services.constructions import construct
from phylolab.services.phylogeny import cared_edges, competition_graph, phylogeny_graph


def test_common_prey_gives_competition_edge():
    assert competition_graph(Digraph.from_arcs(3, [(0, 2), (1, 2)])).edges() == [(0, 1)]


def test_arcless_digraph_has_no_competition():
    assert competition_graph(Digraph.empty(4)).edge_count() == 0


def test_competition_graph_of_clique_construction(clique22):
    a, b, c, e = clique22.labels(["A", "B", "C", "E"])
    expected = sorted([tuple(sorted((a, e))), tuple(sorted((c, b)))])
    assert competition_graph(clique22.digraph).edges() == expected


def test_phylogeny_graph_of_clique_construction(clique22):
    pg = phylogeny_graph(clique22.digraph)
    assert pg.is_clique(from_vertices(clique22.labels(["A", "B", "C", "E"])))
    x = clique22.label("X")
    assert pg.neighbors(x) == sorted(clique22.labels(["B", "C"]))


def test_phylogeny_graph_of_three_two_construction():
    result = construct("clique_32")
    hexagon = result.labels([f"v_{k}" for k in range(1, 7)])
    assert phylogeny_graph(result.digraph).is_clique(from_vertices(hexagon))


def test_single_arc_phylogeny_graph():
    assert phylogeny_graph(Digraph.from_arcs(2, [(0, 1)])).edges() == [(0, 1)]


def test_cyclic_input_is_rejected():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    for derive in (competition_graph, phylogeny_graph, cared_edges):
        with pytest.raises(CyclicInput):
            derive(d)


def test_cared_edge_with_one_caring_vertex():
    assert cared_edges(Digraph.from_arcs(3, [(0, 2), (1, 2)])).as_dict() == {(0, 1): [2]}


def test_competition_edge_inside_underlying_graph_is_not_cared():
    assert len(cared_edges(Digraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)]))) == 0


def test_cared_edges_of_hole_construction(hole3i_2):
    name = hole3i_2.label
    care = cared_edges(hole3i_2.digraph)
    assert len(care) == 3
    assert care.caring(name("v_{0,2}"), name("v_{1,1}")) == [name("v_{0,3}")]
    assert care.caring(name("v_{1,2}"), name("v_{0,1}")) == [name("v_{1,3}")]
    assert care.caring(name("v_{0,2}"), name("v_{1,2}")) == [name("u")]


@pytest.mark.property_based
@given(staircase_dags(max_n=7))
@settings(max_examples=120, deadline=None, derandomize=True)
def test_phylogeny_graph_is_the_moral_graph(d):
    pg = phylogeny_graph(d)
    assert set(to_nx(pg).edges()) == {tuple(sorted(e)) for e in nx.moral_graph(to_nx_digraph(d)).edges()}
    cared = {(e.u, e.v) for e in cared_edges(d).entries}
    competition = set(competition_graph(d).edges())
    underlying = {tuple(sorted(a)) for a in d.arcs()}
    assert cared == competition - underlying


@pytest.mark.property_based
@given(staircase_dags(max_n=7))
@settings(max_examples=80, deadline=None, derandomize=True)
def test_prey_and_predators_form_a_clique(d):
    pg = phylogeny_graph(d)
    for w in range(d.n):
        assert pg.is_clique(from_vertices(d.in_neighbors(w) + [w]))


@pytest.mark.property_based
@given(staircase_dags(max_n=7, min_n=2), st.data())
@settings(max_examples=80, deadline=None, derandomize=True)
def test_adding_an_arc_keeps_every_edge(d, data):
    absent = [(u, v) for u in range(d.n) for v in range(u + 1, d.n) if not d.has_arc(u, v)]
    assume(absent)
    arc = data.draw(st.sampled_from(absent))
    grown = Digraph.from_arcs(d.n, d.arcs() + [arc])
    before = set(phylogeny_graph(d).edges())
    after = set(phylogeny_graph(grown).edges())
    assert before <= after
    assert tuple(sorted(arc)) in after
