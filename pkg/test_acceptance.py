"""Acceptance sweeps over the named constructions and the enumerated universes"""
from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from phylolab.models.bitset import from_vertices
from phylolab.models.graph import Digraph, Graph
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.verification import VerifyParams
from phylolab.services.chordality import enumerate_holes, is_chordal, is_perfect_elimination_ordering, validate_hole
from phylolab.services.cliques import clique_number
from phylolab.services.constructions import construct, expand_clique
from phylolab.services.core_graphs import check_bounds, underlying_graph
from phylolab.services.phylogeny import phylogeny_graph
from phylolab.services.verification import HOLE_STATEMENTS, verify

SMALL_BOUNDS = [(2, 2), (2, 3), (3, 2), (3, 3)]


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for chosen in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[t] for t in range(len(pairs)) if chosen >> t & 1])


def _naive_phylogeny_edges(d: Digraph):
    arcs = set(d.arcs())
    edges = set()
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if (u, v) in arcs or (v, u) in arcs:
                edges.add((u, v))
            for w in range(d.n):
                if (u, w) in arcs and (v, w) in arcs:
                    edges.add((u, v))
    return edges


# Constructions

@pytest.mark.parametrize("i", range(2, 11))
def test_long_hole_construction_has_chordal_phylogeny_graph(i):
    result = construct("hole3i", i)
    claims = {c.kind: c for c in result.claimed}
    hole = claims["underlying_hole"].vertices
    assert len(hole) == 3 * i
    assert validate_hole(underlying_graph(result.digraph), hole)
    pg = phylogeny_graph(result.digraph)
    certificate = is_chordal(pg)
    assert certificate.chordal and nx.is_chordal(to_nx(pg))
    assert is_perfect_elimination_ordering(pg, certificate.peo)
    assert is_perfect_elimination_ordering(pg, claims["peo"].vertices)


def test_clique_expansion_chain(clique22):
    d = clique22.digraph
    clique = clique22.labels(["A", "B", "C", "E"])
    for m in range(1, 5):
        d = expand_clique(d, clique, 1)
        clique = clique + [d.n - 1]
        assert check_bounds(d, DegreeBounds(i=2 + m, j=2)).passed
        assert clique_number(phylogeny_graph(d)) == 4 + m
        assert phylogeny_graph(d).is_clique(from_vertices(clique))


# Oracles on every small input

def test_phylogeny_graph_matches_the_naive_definition():
    checked = 0
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for chosen in range(1 << len(pairs)):
            d = Digraph.from_arcs(n, [pairs[t] for t in range(len(pairs)) if chosen >> t & 1])
            assert set(phylogeny_graph(d).edges()) == _naive_phylogeny_edges(d)
            checked += 1
    assert checked == 1 + 2 + 8 + 64 + 1024


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_chordality_matches_hole_enumeration(n):
    for g in _all_graphs(n):
        assert is_chordal(g).chordal == (next(enumerate_holes(g), None) is None)


# Statement sweeps

@pytest.mark.slow
@pytest.mark.parametrize("i, j", SMALL_BOUNDS)
def test_forbidden_list_and_clique_bound_up_to_six(i, j):
    params = VerifyParams(i=i, j=j, n=6, workers=4)
    for key in ("thm_1_4", "thm_omega_ij"):
        report = verify(key, params)
        assert report.verdict == "pass", report.counterexamples
    assert report.extras["max_omega"] <= i * j


@pytest.mark.slow
def test_forbidden_list_and_clique_bound_on_seven_vertices():
    params = VerifyParams(i=2, j=2, n=7, n_min=7, workers=4)
    assert verify("thm_1_4", params).verdict == "pass"
    assert verify("thm_omega_ij", params).verdict == "pass"


@pytest.mark.slow
def test_tight_clique_bound_on_random_samples():
    report = verify("thm_omega_3i2", VerifyParams(i=4, j=2, n=9, n_min=5, samples=100_000, seed=1, workers=4))
    assert report.verdict == "pass"
    assert report.extras["max_omega"] <= 7


@pytest.mark.slow
@pytest.mark.parametrize("j", [1, 2, 3])
def test_forest_characterisation_up_to_six(j):
    report = verify("char_1j", VerifyParams(i=1, j=j, n=6, workers=4))
    assert report.verdict == "pass", report.counterexamples


@pytest.mark.slow
@pytest.mark.parametrize("i", [1, 2, 3])
def test_i1_characterisation_up_to_five(i):
    report = verify("char_i1", VerifyParams(i=i, j=1, n=5, workers=4))
    assert report.verdict == "pass", report.counterexamples


@pytest.mark.slow
@pytest.mark.parametrize("i", [2, 3])
@pytest.mark.parametrize("key", sorted(HOLE_STATEMENTS))
def test_hole_statements_up_to_seven(key, i):
    report = verify(key, VerifyParams(i=i, j=2, n=7, workers=4))
    assert report.verdict == "pass", report.counterexamples
    if i == 2 and key in ("lem_2_1", "thm_1_1"):
        assert report.hypothesis_fired > 0


@pytest.mark.slow
@pytest.mark.parametrize("i, j", SMALL_BOUNDS)
def test_neighbourhood_bound_on_random_samples(i, j):
    report = verify("prop_3_1", VerifyParams(i=i, j=j, n=9, n_min=5, samples=10_000, seed=i * 10 + j, workers=4))
    assert report.verdict == "pass", report.counterexamples
    assert report.instances_checked == 10_000
