# -*- coding: utf-8 -*-

"""
    groupiepy.groupie
    ~~~~~~~~~~~~~~~~~

    Groupie classification and the conditioning statistics behind it.

    A vertex v is a groupie when the average degree of its neighbours is at
    least the average degree 2e/n of the whole graph, i.e. when
    ``n * r(v) >= 2 * e * deg(v)``. An isolated vertex is a groupie only
    when the graph has no edges at all.
"""

from __future__ import absolute_import

from fractions import Fraction

import numpy as np

from .exc import ParameterError, UnsupportedCaseError
from .graph import neighbor_degree_sum
from .payload import Payload, PType

# n * r(v) <= n**3 must fit a signed 64-bit integer on the vectorised path
INT64_SAFE_N = 2000000

# chunk of edges per bincount pass when accumulating r(v)
EDGE_CHUNK = 1 << 22


class GroupieReport(Payload):
    payload_spec = {
        1: (PType.LIST, 'flags', PType.BOOL, False),
        2: (PType.INT, 'count', False),
        3: (PType.RATIONAL, 'proportion', False),
        4: (PType.DOUBLE, 'proportion_value', False),
        5: (PType.INT, 'e', False),
        6: (PType.INT, 'n', False),
    }
    default_spec = [('flags', ()), ('count', 0), ('proportion', None),
                    ('proportion_value', None), ('e', 0), ('n', 0)]


class NeighborhoodStats(Payload):
    payload_spec = {
        1: (PType.INT, 'v', False),
        2: (PType.INT, 'i', False),
        3: (PType.INT, 'e1', False),
        4: (PType.INT, 'e2', False),
        5: (PType.INT, 'e3', False),
    }
    default_spec = [('v', None), ('i', 0), ('e1', 0), ('e2', 0), ('e3', 0)]


# (j, k) labels of the ten edge groups of an adjacent-pair partition
PAIR_GROUPS = ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2),
               (2, 3), (2, 4), (3, 3), (3, 4), (4, 4))


class PairPartitionStats(Payload):
    payload_spec = dict(
        [(1, (PType.INT, 'v1', False)),
         (2, (PType.INT, 'v2', False)),
         (3, (PType.BOOL, 'adjacent', False)),
         (4, (PType.INT, 'i1', False)),
         (5, (PType.INT, 'i2', False)),
         (6, (PType.INT, 'i3', False)),
         (7, (PType.INT, 'i4', False))]
        + [(8 + k, (PType.INT, 'e%d%d' % jk, False))
           for k, jk in enumerate(PAIR_GROUPS)])
    default_spec = [('v1', None), ('v2', None), ('adjacent', False),
                    ('i1', 0), ('i2', 0), ('i3', 0), ('i4', 0)] \
        + [('e%d%d' % jk, 0) for jk in PAIR_GROUPS]

    def group_count(self, j, k):
        j, k = min(j, k), max(j, k)
        return getattr(self, 'e%d%d' % (j, k))


def neighbor_degree_sums(graph):
    """r(v) for every vertex in one pass over the edges."""
    r = np.zeros(graph.n, dtype=np.float64)
    deg = graph.degrees.astype(np.float64)
    for start in range(0, graph.e, EDGE_CHUNK):
        heads = graph.heads[start:start + EDGE_CHUNK]
        tails = graph.tails[start:start + EDGE_CHUNK]
        r += np.bincount(heads, weights=deg[tails], minlength=graph.n)
        r += np.bincount(tails, weights=deg[heads], minlength=graph.n)
    # every partial sum is an integer below 2**53
    return np.rint(r).astype(np.int64)


def groupie_flags(graph):
    """Boolean groupie indicator for every vertex."""
    n, e = graph.n, graph.e
    if n == 0:
        raise ParameterError(ParameterError.EMPTY_GRAPH)
    if e == 0:
        return np.ones(n, dtype=bool)

    deg = graph.degrees
    r = neighbor_degree_sums(graph)
    if n <= INT64_SAFE_N:
        flags = n * r >= 2 * e * deg
    else:
        lhs = r.astype(object) * n
        rhs = deg.astype(object) * (2 * e)
        flags = np.asarray(lhs >= rhs, dtype=bool)
    flags &= deg > 0
    return flags


def count_groupies(graph):
    return int(np.count_nonzero(groupie_flags(graph)))


def is_groupie(graph, v):
    """Whether vertex `v` of `graph` is a groupie, in exact integers."""
    v = graph.check_vertex(v)
    deg = int(graph.degrees[v])
    if deg == 0:
        return graph.e == 0
    return graph.n * neighbor_degree_sum(graph, v) >= 2 * graph.e * deg


def groupie_report(graph):
    if graph.n == 0:
        raise ParameterError(ParameterError.EMPTY_GRAPH,
                             'Groupie report needs at least one vertex')
    flags = groupie_flags(graph)
    count = int(np.count_nonzero(flags))
    proportion = Fraction(count, graph.n)
    return GroupieReport(flags=tuple(bool(f) for f in flags), count=count,
                         proportion=proportion,
                         proportion_value=float(proportion),
                         e=graph.e, n=graph.n)


def neighborhood_stats(graph, v):
    """Split the edges of `graph` around `v`: its degree i, the edges e1
    inside its neighbourhood V1, e2 inside the rest V2 and e3 across.
    """
    v = graph.check_vertex(v)
    inside = np.zeros(graph.n, dtype=bool)
    inside[graph.neighbors(v)] = True

    away = (graph.heads != v) & (graph.tails != v)
    h_in = inside[graph.heads[away]]
    t_in = inside[graph.tails[away]]
    e1 = int(np.count_nonzero(h_in & t_in))
    e2 = int(np.count_nonzero(~h_in & ~t_in))
    e3 = int(np.count_nonzero(h_in ^ t_in))
    i = int(graph.degrees[v])
    assert i + e1 + e2 + e3 == graph.e
    return NeighborhoodStats(v=v, i=i, e1=e1, e2=e2, e3=e3)


def single_vertex_statistic(stats, n):
    """S = 2(n-i)e1 + (n-2i)(e3+i) - 2i*e2; for deg >= 1, S >= 0 exactly
    when the vertex is a groupie.
    """
    i = stats.i
    return 2 * (n - i) * stats.e1 + (n - 2 * i) * (stats.e3 + i) \
        - 2 * i * stats.e2


def pair_partition_stats(graph, v1, v2):
    """Classify the other n-2 vertices by adjacency to (v1, v2) into V1
    (v1 only), V2 (both), V3 (v2 only) and V4 (neither) and count the edges
    inside and between the classes.
    """
    v1 = graph.check_vertex(v1)
    v2 = graph.check_vertex(v2)
    if v1 == v2:
        raise ParameterError(ParameterError.INVALID_VERTEX,
                             'Pair statistics need two distinct vertices')

    a = np.zeros(graph.n, dtype=bool)
    b = np.zeros(graph.n, dtype=bool)
    a[graph.neighbors(v1)] = True
    b[graph.neighbors(v2)] = True

    labels = np.full(graph.n, 4, dtype=np.int64)
    labels[a & ~b] = 1
    labels[a & b] = 2
    labels[~a & b] = 3
    labels[[v1, v2]] = 0

    sizes = np.bincount(labels, minlength=5)
    lh = labels[graph.heads]
    lt = labels[graph.tails]
    away = (lh > 0) & (lt > 0)
    lo = np.minimum(lh[away], lt[away]) - 1
    hi = np.maximum(lh[away], lt[away]) - 1
    grid = np.bincount(lo * 4 + hi, minlength=16)

    counts = dict(('e%d%d' % (j, k), int(grid[(j - 1) * 4 + (k - 1)]))
                  for j, k in PAIR_GROUPS)
    stats = PairPartitionStats(v1=v1, v2=v2, adjacent=bool(a[v2]),
                               i1=int(sizes[1]), i2=int(sizes[2]),
                               i3=int(sizes[3]), i4=int(sizes[4]), **counts)

    # v1's and v2's own edges plus the edge between them, if any
    incident = stats.i1 + 2 * stats.i2 + stats.i3 + int(stats.adjacent)
    assert stats.i4 == graph.n - 2 - stats.i1 - stats.i2 - stats.i3
    assert sum(counts.values()) + incident == graph.e
    return stats


def pair_statistics(stats, n):
    """(B1, B2) for an adjacent pair: B1 >= 0 and B2 >= 0 exactly when both
    vertices are groupies.
    """
    if not stats.adjacent:
        raise UnsupportedCaseError(
            'Pair statistics B1/B2 are defined for adjacent pairs only; '
            'classify non-adjacent pairs with is_groupie')
    i1, i2, i3 = stats.i1, stats.i2, stats.i3
    e = stats.group_count
    d1 = i1 + i2 + 1
    d2 = i3 + i2 + 1
    total = i1 + i2 + i3 + 1

    b1 = 2 * (n - d1) * (e(1, 1) + e(2, 2) + e(1, 2) + i2) \
        + (n - 2 * d1) * (e(1, 3) + e(1, 4) + e(2, 3) + e(2, 4) + total) \
        - 2 * d1 * (e(3, 3) + e(3, 4) + e(4, 4))
    b2 = 2 * (n - d2) * (e(3, 3) + e(2, 2) + e(2, 3) + i2) \
        + (n - 2 * d2) * (e(1, 3) + e(3, 4) + e(1, 2) + e(2, 4) + total) \
        - 2 * d2 * (e(1, 1) + e(1, 4) + e(4, 4))
    return b1, b2
