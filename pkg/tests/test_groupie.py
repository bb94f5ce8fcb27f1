# -*- coding: utf-8 -*-

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groupiepy import groupie
from groupiepy.exc import ParameterError, UnsupportedCaseError
from groupiepy.graph import Graph, gen_gnp
from groupiepy.groupie import (count_groupies, groupie_flags, groupie_report,
                               is_groupie, neighbor_degree_sums,
                               neighborhood_stats, pair_partition_stats,
                               pair_statistics, single_vertex_statistic)
from groupiepy.parser import load


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs),
                           max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def test_path():
    report = groupie_report(load('graph-cases/p3.edges'))
    assert report.flags == (True, False, True)
    assert report.count == 2
    assert report.proportion == Fraction(2, 3)
    assert report.proportion_value == pytest.approx(0.6667, abs=1e-4)
    assert report.e == 2 and report.n == 3


def test_regular_graphs():
    assert groupie_report(load('graph-cases/k4.edges')).count == 4
    cycle = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert count_groupies(cycle) == 5


def test_isolated_vertices():
    assert groupie_report(load('graph-cases/empty3.edges')).count == 3
    assert count_groupies(Graph.from_edges(1, [])) == 1

    graph = Graph.from_edges(3, [(0, 1)])
    assert groupie_flags(graph).tolist() == [True, True, False]
    assert not is_groupie(graph, 2)


def test_star():
    graph = load('graph-cases/star4.edges')
    assert groupie_flags(graph).tolist() == [False, True, True, True]


def test_no_vertices():
    with pytest.raises(ParameterError) as excinfo:
        groupie_report(Graph.from_edges(0, []))
    assert excinfo.value.type == ParameterError.EMPTY_GRAPH


def test_neighborhood_stats_of_path():
    graph = load('graph-cases/p3.edges')
    end = neighborhood_stats(graph, 0)
    assert (end.i, end.e1, end.e2, end.e3) == (1, 0, 0, 1)
    assert single_vertex_statistic(end, 3) == 2

    middle = neighborhood_stats(graph, 1)
    assert (middle.i, middle.e1, middle.e2, middle.e3) == (2, 0, 0, 0)
    assert single_vertex_statistic(middle, 3) == -2


def test_pair_partition_of_k4():
    stats = pair_partition_stats(load('graph-cases/k4.edges'), 0, 1)
    assert stats.adjacent
    assert (stats.i1, stats.i2, stats.i3, stats.i4) == (0, 2, 0, 0)
    assert stats.e22 == 1
    assert stats.group_count(2, 2) == 1
    b1, b2 = pair_statistics(stats, 4)
    assert b1 >= 0 and b2 >= 0


def test_pair_statistics_need_adjacency():
    graph = load('graph-cases/p3.edges')
    stats = pair_partition_stats(graph, 0, 2)
    assert not stats.adjacent
    with pytest.raises(UnsupportedCaseError):
        pair_statistics(stats, 3)

    with pytest.raises(ParameterError):
        pair_partition_stats(graph, 1, 1)


def test_chunked_degree_sums(monkeypatch):
    graph = gen_gnp(120, 0.1, seed=3)
    expected = [sum(int(graph.degrees[u]) for u in graph.neighbors(v))
                for v in range(graph.n)]
    monkeypatch.setattr(groupie, 'EDGE_CHUNK', 7)
    assert neighbor_degree_sums(graph).tolist() == expected


def test_wide_integer_path(monkeypatch):
    graph = gen_gnp(200, 0.05, seed=8)
    flags = groupie_flags(graph)
    monkeypatch.setattr(groupie, 'INT64_SAFE_N', 0)
    assert np.array_equal(groupie_flags(graph), flags)


@given(graphs())
def test_vectorised_flags_match_definition(graph):
    flags = groupie_flags(graph)
    n, e = graph.n, graph.e
    for v in range(n):
        deg = graph.degree(v)
        if deg == 0:
            expected = e == 0
        else:
            r = sum(graph.degree(u) for u in graph.neighbors(v))
            expected = Fraction(r, deg) >= Fraction(2 * e, n)
        assert bool(flags[v]) == expected == is_groupie(graph, v)


@given(graphs())
def test_single_vertex_statistic_sign(graph):
    flags = groupie_flags(graph)
    for v in range(graph.n):
        if graph.degree(v) == 0:
            continue
        s = single_vertex_statistic(neighborhood_stats(graph, v), graph.n)
        assert (s >= 0) == bool(flags[v])


@given(graphs())
def test_at_least_two_groupies(graph):
    assert count_groupies(graph) >= min(2, graph.n)


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_pair_statistics_sign(graph):
    flags = groupie_flags(graph)
    for u, v in graph.edge_list():
        stats = pair_partition_stats(graph, u, v)
        assert stats.i1 + stats.i2 + stats.i3 + stats.i4 == graph.n - 2
        b1, b2 = pair_statistics(stats, graph.n)
        assert (b1 >= 0) == bool(flags[u])
        assert (b2 >= 0) == bool(flags[v])
        # B1 coincides with the single-vertex statistic of u
        s = single_vertex_statistic(neighborhood_stats(graph, u), graph.n)
        assert b1 == s


def test_k4_with_disjoint_edge():
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)] + [(4, 5)]
    graph = Graph.from_edges(6, edges)
    assert graph.e == 7
    assert [is_groupie(graph, v) for v in range(6)] == [True] * 4 + [False] * 2


def test_neighborhood_stats_of_p4():
    graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    stats = neighborhood_stats(graph, 0)
    assert (stats.i, stats.e1, stats.e2, stats.e3) == (1, 0, 1, 1)
    assert single_vertex_statistic(stats, 4) == 2


def test_pair_statistics_of_lone_edge():
    lone = pair_partition_stats(Graph.from_edges(4, [(0, 1)]), 0, 1)
    assert (lone.i1, lone.i2, lone.i3, lone.i4, lone.e44) == (0, 0, 0, 2, 0)
    assert pair_statistics(lone, 4) == (2, 2)

    matched = pair_partition_stats(Graph.from_edges(4, [(0, 1), (2, 3)]),
                                   0, 1)
    assert matched.e44 == 1
    assert pair_statistics(matched, 4) == (0, 0)


@given(graphs())
def test_degree_sums_total(graph):
    degrees = [int(d) for d in graph.degrees]
    assert int(neighbor_degree_sums(graph).sum()) == \
        sum(d * d for d in degrees)


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_pair_statistics_swap(graph):
    for u, v in graph.edge_list():
        forward = pair_statistics(pair_partition_stats(graph, u, v), graph.n)
        backward = pair_statistics(pair_partition_stats(graph, v, u),
                                   graph.n)
        assert backward == forward[::-1]
