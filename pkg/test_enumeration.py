"""Tests for staircase and random DAG universes"""
from itertools import product

import networkx as nx
import pytest
from pydantic import ValidationError

from conftest import to_nx_digraph
from phylolab.core.errors import CapExceeded, InvalidParams
from phylolab.models.graph import Digraph
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.verification import EnumSpec
from phylolab.services.chordality import validate_hole
from phylolab.services.core_graphs import check_bounds, is_acyclic, relabel, topological_order, underlying_graph
from phylolab.services.enumeration import (
    count_arc_subsets, count_dags, enumerate_dags, enumerate_staircase, long_hole_dag, random_dag,
    staircase_prefixes,
)


def test_three_vertices_with_unit_bounds():
    assert count_dags(EnumSpec(n=3, bounds=DegreeBounds(i=1, j=1))) == 5


def test_three_vertices_with_loose_bounds():
    assert count_dags(EnumSpec(n=3, bounds=DegreeBounds(i=2, j=2))) == 8


def test_single_vertex():
    assert list(enumerate_dags(EnumSpec(n=1, bounds=DegreeBounds(i=1, j=1)))) == [Digraph.empty(1)]


def test_empty_universe_member():
    assert list(enumerate_staircase(0, DegreeBounds(i=1, j=1))) == [Digraph.empty(0)]


def test_staircase_output_is_distinct_and_bounded():
    bounds = DegreeBounds(i=2, j=1)
    seen = list(enumerate_staircase(5, bounds))
    assert len(seen) == len(set(seen))
    assert all(check_bounds(d, bounds).passed for d in seen)
    assert all(u < v for d in seen for u, v in d.arcs())


@pytest.mark.parametrize("n, i, j", [(4, 1, 1), (4, 2, 1), (5, 2, 2), (5, 1, 3), (6, 2, 2)])
def test_counts_match_brute_force(n, i, j):
    bounds = DegreeBounds(i=i, j=j)
    assert count_dags(EnumSpec(n=n, bounds=bounds)) == count_arc_subsets(n, bounds)


def test_prefixes_partition_in_order():
    bounds = DegreeBounds(i=2, j=2)
    whole = list(enumerate_staircase(5, bounds))
    pieces = [d for prefix in staircase_prefixes(5, depth=3) for d in enumerate_staircase(5, bounds, prefix)]
    assert pieces == whole
    assert len(staircase_prefixes(3, depth=6)) == 8


def _labelled_dags(n: int, bounds: DegreeBounds):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for choice in product((None, "forward", "backward"), repeat=len(pairs)):
        arcs = []
        for (u, v), way in zip(pairs, choice):
            if way == "forward":
                arcs.append((u, v))
            elif way == "backward":
                arcs.append((v, u))
        d = Digraph.from_arcs(n, arcs)
        if nx.is_directed_acyclic_graph(to_nx_digraph(d)) and check_bounds(d, bounds).passed:
            yield d


@pytest.mark.parametrize("n, i, j", [(3, 1, 1), (4, 2, 2), (4, 1, 2)])
def test_every_bounded_dag_has_a_staircase_copy(n, i, j):
    bounds = DegreeBounds(i=i, j=j)
    staircase = set(enumerate_staircase(n, bounds))
    for d in _labelled_dags(n, bounds):
        order = topological_order(d)
        position = [0] * n
        for t, v in enumerate(order):
            position[v] = t
        assert relabel(d, position) in staircase


def test_staircase_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_dags(EnumSpec(n=8, bounds=DegreeBounds(i=2, j=2))))
    with pytest.raises(CapExceeded):
        count_dags(EnumSpec(n=4, bounds=DegreeBounds(i=2, j=2)), cap=3)


# Random mode

def test_random_mode_needs_samples():
    with pytest.raises(ValidationError):
        EnumSpec(n=5, bounds=DegreeBounds(i=2, j=2), mode="random")


def test_random_mode_is_reproducible():
    spec = EnumSpec(n=8, bounds=DegreeBounds(i=2, j=2), mode="random", samples=20, seed=7)
    first = list(enumerate_dags(spec))
    assert first == list(enumerate_dags(spec))
    assert len(first) == 20
    assert all(check_bounds(d, spec.bounds).passed and is_acyclic(d) for d in first)
    assert random_dag(8, spec.bounds, 7, 3) == first[3]


def test_random_mode_respects_probability_extremes():
    bounds = DegreeBounds(i=3, j=3)
    assert random_dag(6, bounds, seed=1, index=0, p=1e-9).arc_count() == 0
    full = random_dag(6, bounds, seed=1, index=0, p=1.0)
    assert full.arc_count() > 0


@pytest.mark.parametrize("seed", range(3))
def test_long_hole_sampler_plants_a_hole(seed):
    bounds = DegreeBounds(i=2, j=2)
    for index in range(15):
        d, hole = long_hole_dag(10, bounds, seed, index)
        assert 5 <= len(hole) <= 9 and d.n <= 10
        assert validate_hole(underlying_graph(d), hole)
        assert is_acyclic(d)
        assert check_bounds(d, bounds).passed


def test_long_hole_sampler_preconditions():
    with pytest.raises(InvalidParams):
        long_hole_dag(4, DegreeBounds(i=2, j=2), 0, 0)
    with pytest.raises(InvalidParams):
        long_hole_dag(8, DegreeBounds(i=1, j=2), 0, 0)
