# -*- coding: utf-8 -*-

"""
    groupiepy.oracle
    ~~~~~~~~~~~~~~~~

    Exact answers on small instances by enumerating every labeled graph.

    A graph on n vertices is encoded as a C(n, 2)-bit mask; bit k stands
    for the k-th pair of the lexicographic ordering (0,1), (0,2), ...,
    (n-2, n-1). Probabilities are kept as exact fractions.
"""

from __future__ import absolute_import

import logging
from fractions import Fraction
from math import comb

import numpy as np

from .exc import ParameterError, ResourceError
from .graph import Graph, check_count
from .groupie import groupie_flags
from .payload import Payload, PType

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 5
HARD_ENUMERATION_LIMIT = 6

LEX = 'lex'
GRAY = 'gray'


class ExactExpectation(Payload):
    payload_spec = {
        1: (PType.INT, 'n', False),
        2: (PType.RATIONAL, 'p', False),
        3: (PType.RATIONAL, 'expected_count', False),
        4: (PType.RATIONAL, 'expected_proportion', False),
        5: (PType.LIST, 'per_graph', (PType.LIST, PType.INT), False),
    }
    default_spec = [('n', None), ('p', None), ('expected_count', None),
                    ('expected_proportion', None), ('per_graph', None)]


def rational(p):
    """Exact probability from a Fraction, int, 'a/b' string or float."""
    if isinstance(p, float):
        p = repr(p)
    try:
        p = Fraction(p)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             'Cannot read %r as a probability' % (p,))
    if not 0 <= p <= 1:
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             'p must lie in [0, 1], got %s' % p)
    return p


def _check_size(n, allow_six):
    n = check_count(n, 'n')
    limit = HARD_ENUMERATION_LIMIT if allow_six else ENUMERATION_LIMIT
    if n > limit:
        raise ResourceError('Enumeration of all graphs on %d vertices '
                            'exceeds the cap of %d' % (n, limit),
                            limit=limit)
    return n


def _pair_arrays(n):
    heads, tails = np.triu_indices(n, 1)
    return heads.astype(np.int64), tails.astype(np.int64)


def iter_masks(m, order=LEX):
    if order == LEX:
        return iter(range(1 << m))
    if order == GRAY:
        return (k ^ (k >> 1) for k in range(1 << m))
    raise ParameterError(ParameterError.OUT_OF_RANGE,
                         'Unknown traversal order %r' % (order,))


def graph_from_mask(n, mask, pairs=None):
    heads, tails = pairs if pairs is not None else _pair_arrays(n)
    bits = (mask >> np.arange(heads.size)) & 1
    chosen = bits.astype(bool)
    return Graph(n, heads[chosen], tails[chosen])


def iter_all_graphs(n, order=LEX, allow_six=False):
    """Yield (mask, graph) for every labeled graph on `n` vertices."""
    n = _check_size(n, allow_six)
    pairs = _pair_arrays(n)
    m = pairs[0].size
    logger.debug('enumerating %d graphs on %d vertices', 1 << m, n)
    for mask in iter_masks(m, order):
        yield mask, graph_from_mask(n, mask, pairs)


def enumerate_all_graphs(n, visitor, order=LEX, allow_six=False):
    """Call `visitor(graph)` once per labeled graph; returns the count."""
    visited = 0
    for _, graph in iter_all_graphs(n, order=order, allow_six=allow_six):
        visitor(graph)
        visited += 1
    return visited


def _weights(m, p):
    q = 1 - p
    return [p ** e * q ** (m - e) for e in range(m + 1)]


def enumerate_expected_groupies(n, p, order=LEX, keep_graphs=False):
    """Exact E[number of groupies] in B(n, p) for n <= 6."""
    p = rational(p)
    n = _check_size(n, allow_six=True)
    m = n * (n - 1) // 2
    by_edges = [0] * (m + 1)
    per_graph = [] if keep_graphs else None
    for mask, graph in iter_all_graphs(n, order=order, allow_six=True):
        count = int(np.count_nonzero(groupie_flags(graph)))
        by_edges[graph.e] += count
        if keep_graphs:
            per_graph.append([mask, count])
    weights = _weights(m, p)
    expected_count = sum(c * w for c, w in zip(by_edges, weights))
    expected_count = Fraction(expected_count)
    return ExactExpectation(n=n, p=p, expected_count=expected_count,
                            expected_proportion=expected_count / n,
                            per_graph=per_graph)


def _binomial_pmf(trials, p):
    q = 1 - p
    return [comb(trials, k) * p ** k * q ** (trials - k)
            for k in range(trials + 1)]


def exact_groupie_probability_given_degree(n, i, p):
    """Exact P(v is a groupie | deg(v) = i) in B(n, p), summed over every
    value of the edge counts e1, e2, e3 around v.
    """
    p = rational(p)
    n = _check_size(n, allow_six=True)
    i = check_count(i, 'i', minimum=0)
    if i > n - 1:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Degree i=%d out of range 0..%d' % (i, n - 1))
    rest = n - 1 - i
    pmf1 = _binomial_pmf(i * (i - 1) // 2, p)
    pmf2 = _binomial_pmf(rest * (rest - 1) // 2, p)
    pmf3 = _binomial_pmf(i * rest, p)

    if i == 0:
        # isolated: groupie iff the graph is edgeless
        return Fraction(pmf2[0])

    total = Fraction(0)
    for e1, w1 in enumerate(pmf1):
        for e2, w2 in enumerate(pmf2):
            for e3, w3 in enumerate(pmf3):
                s = 2 * (n - i) * e1 + (n - 2 * i) * (e3 + i) - 2 * i * e2
                if s >= 0:
                    total += w1 * w2 * w3
    return total


def exact_pair_covariance(n, p, v1=0, v2=1):
    """Exact Cov[X_v1, X_v2] of the groupie indicators in B(n, p)."""
    p = rational(p)
    n = _check_size(n, allow_six=True)
    if n < 2:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Pair covariance needs n >= 2')
    m = n * (n - 1) // 2
    weights = _weights(m, p)
    ex1 = ex2 = ex12 = Fraction(0)
    for _, graph in iter_all_graphs(n, allow_six=True):
        flags = groupie_flags(graph)
        w = weights[graph.e]
        x1, x2 = bool(flags[v1]), bool(flags[v2])
        ex1 += w * x1
        ex2 += w * x2
        ex12 += w * (x1 and x2)
    return ex12 - ex1 * ex2


def exact_isolated_probability(n, p):
    """Exact P(B(n, p) has an isolated vertex)."""
    p = rational(p)
    n = _check_size(n, allow_six=True)
    m = n * (n - 1) // 2
    weights = _weights(m, p)
    total = Fraction(0)
    for _, graph in iter_all_graphs(n, allow_six=True):
        if np.any(graph.degrees == 0):
            total += weights[graph.e]
    return total
