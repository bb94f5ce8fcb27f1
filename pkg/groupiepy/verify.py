# -*- coding: utf-8 -*-

"""
    groupiepy.verify
    ~~~~~~~~~~~~~~~~

    Property suites run over every labeled graph of a given size, plus the
    closed-form identities that need no graphs at all.
"""

from __future__ import absolute_import

import logging
from fractions import Fraction

import numpy as np

from .asymptotics import DiscreteDistribution, convolution_bound_check
from .exc import ResourceError
from .graph import check_count
from .groupie import (groupie_flags, is_groupie, neighborhood_stats,
                      pair_partition_stats, pair_statistics,
                      single_vertex_statistic)
from .moments import (exact_pair_moments, exact_single_vertex_moments,
                      printed_pair_moments, single_vertex_moments)
from .oracle import (GRAY, HARD_ENUMERATION_LIMIT, ENUMERATION_LIMIT,
                     enumerate_expected_groupies, graph_from_mask,
                     iter_all_graphs)
from .payload import Payload, PType
from .rng import derive_seed

logger = logging.getLogger(__name__)

MOMENT_GRID_MAX_N = 12
PAIR_GRID_MAX_N = 8
MOMENT_GRID_P = tuple(Fraction(k, 10) for k in (1, 3, 5, 7, 9))

SPOT_SAMPLE_SIZE = 256
SPOT_SAMPLE_SEED = 0x5EED

CONVOLUTION_TRIALS = 100
CONVOLUTION_SEED = 20240611


class SuiteResult(Payload):
    payload_spec = {
        1: (PType.STRING, 'name', False),
        2: (PType.BOOL, 'passed', False),
        3: (PType.INT, 'checked', False),
        4: (PType.INT, 'failures', False),
        5: (PType.STRING, 'detail', False),
    }
    default_spec = [('name', None), ('passed', True), ('checked', 0),
                    ('failures', 0), ('detail', None)]


class _Tally(object):

    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.failures = 0
        self.detail = None

    def check(self, ok, describe):
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.detail is None:
                self.detail = describe()

    def result(self):
        logger.debug('suite %s: %d checks, %d failures',
                     self.name, self.checked, self.failures)
        return SuiteResult(name=self.name, passed=self.failures == 0,
                           checked=self.checked, failures=self.failures,
                           detail=self.detail)


def _graphs(max_n):
    """Every graph on 1..min(max_n, 5) vertices, then a fixed sample of
    graphs on 6 vertices when asked for."""
    for n in range(1, min(max_n, ENUMERATION_LIMIT) + 1):
        for _, graph in iter_all_graphs(n):
            yield graph
    if max_n >= HARD_ENUMERATION_LIMIT:
        n = HARD_ENUMERATION_LIMIT
        m = n * (n - 1) // 2
        for k in range(SPOT_SAMPLE_SIZE):
            mask = derive_seed(SPOT_SAMPLE_SEED, k) & ((1 << m) - 1)
            yield graph_from_mask(n, mask)


def equivalence_suite(max_n):
    """Groupie test against the sign of the single-vertex statistic."""
    tally = _Tally('equivalence')
    for graph in _graphs(max_n):
        flags = groupie_flags(graph)
        for v in range(graph.n):
            direct = is_groupie(graph, v)
            tally.check(bool(flags[v]) == direct,
                        lambda: 'vectorised flag differs at %r v=%d'
                        % (graph.edge_list(), v))
            if graph.degrees[v] == 0:
                continue
            s = single_vertex_statistic(neighborhood_stats(graph, v), graph.n)
            tally.check((s >= 0) == direct,
                        lambda: 'S=%d disagrees at %r v=%d'
                        % (s, graph.edge_list(), v))
    return tally.result()


def existence_suite(max_n):
    """At least one groupie always, at least two once n >= 2."""
    tally = _Tally('existence')
    for graph in _graphs(max_n):
        count = int(np.count_nonzero(groupie_flags(graph)))
        need = 2 if graph.n >= 2 else 1
        tally.check(count >= need,
                    lambda: '%d groupies in %r on %d vertices'
                    % (count, graph.edge_list(), graph.n))
    return tally.result()


def pair_equivalence_suite(max_n):
    tally = _Tally('pair-equivalence')
    for graph in _graphs(max_n):
        flags = groupie_flags(graph)
        for u, v in graph.edge_list():
            for a, b in ((u, v), (v, u)):
                b1, b2 = pair_statistics(pair_partition_stats(graph, a, b),
                                         graph.n)
                tally.check((b1 >= 0) == bool(flags[a])
                            and (b2 >= 0) == bool(flags[b]),
                            lambda: 'B1=%d B2=%d disagree at %r pair %d %d'
                            % (b1, b2, graph.edge_list(), a, b))
    return tally.result()


def moment_identity_suite():
    """Closed-form moments against the edge-group decomposition, in exact
    arithmetic over a fixed grid."""
    tally = _Tally('moment-identities')
    for n in range(2, MOMENT_GRID_MAX_N + 1):
        for p in MOMENT_GRID_P:
            for i in range(n):
                printed = single_vertex_moments(n, i, p, exact=True)
                exact = exact_single_vertex_moments(n, i, p, exact=True)
                tally.check(printed == exact,
                            lambda: 'single n=%d i=%d p=%s' % (n, i, p))

    for n in range(2, PAIR_GRID_MAX_N + 1):
        for p in MOMENT_GRID_P:
            for i1 in range(n - 1):
                for i2 in range(n - 1 - i1):
                    for i3 in range(n - 1 - i1 - i2):
                        printed = printed_pair_moments(n, i1, i2, i3, p,
                                                       exact=True)
                        exact = exact_pair_moments(n, i1, i2, i3, p,
                                                   exact=True)
                        tally.check(
                            printed.covariance == exact.covariance,
                            lambda: 'pair covariance n=%d i=(%d,%d,%d) p=%s'
                            % (n, i1, i2, i3, p))
    return tally.result()


def oracle_consistency_suite(max_n):
    """Exact expectations agree between lexicographic and Gray-code
    traversals."""
    tally = _Tally('oracle-consistency')
    for n in range(1, min(max_n, ENUMERATION_LIMIT) + 1):
        for p in (Fraction(1, 2), Fraction(1, 3)):
            lex = enumerate_expected_groupies(n, p)
            gray = enumerate_expected_groupies(n, p, order=GRAY)
            tally.check(lex == gray, lambda: 'n=%d p=%s' % (n, p))
            tally.check(0 <= lex.expected_proportion <= 1,
                        lambda: 'proportion %s at n=%d'
                        % (lex.expected_proportion, n))
    return tally.result()


def convolution_suite():
    tally = _Tally('convolution-bound')
    bern = DiscreteDistribution.bernoulli
    worked = convolution_bound_check([bern(0.3), bern(0.3)],
                                     [bern(0.5), bern(0.5)])
    tally.check(worked.holds and abs(worked.lhs - 0.24) < 1e-12
                and abs(worked.rhs - 0.4) < 1e-12,
                lambda: 'worked example gave %r' % worked)

    rng = np.random.default_rng(CONVOLUTION_SEED)
    for _ in range(CONVOLUTION_TRIALS):
        size = int(rng.integers(1, 9))
        fs = [bern(float(q)) for q in rng.random(size)]
        gs = [bern(float(q)) for q in rng.random(size)]
        check = convolution_bound_check(fs, gs)
        tally.check(check.holds, lambda: 'bound fails: %r' % check)
    return tally.result()


def run_suites(max_n):
    """Run every suite on graphs of up to `max_n` vertices."""
    max_n = check_count(max_n, 'max_n')
    if max_n > HARD_ENUMERATION_LIMIT:
        raise ResourceError('Verification is capped at %d vertices, got %d'
                            % (HARD_ENUMERATION_LIMIT, max_n),
                            limit=HARD_ENUMERATION_LIMIT)
    return [
        equivalence_suite(max_n),
        existence_suite(max_n),
        pair_equivalence_suite(max_n),
        moment_identity_suite(),
        oracle_consistency_suite(max_n),
        convolution_suite(),
    ]
