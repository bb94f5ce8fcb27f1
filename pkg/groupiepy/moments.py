# -*- coding: utf-8 -*-

"""
    groupiepy.moments
    ~~~~~~~~~~~~~~~~~

    Conditional moments of the linear edge statistics S (single vertex) and
    B1, B2 (adjacent pair).

    Two parallel computations are provided. The ``*_moments`` functions
    evaluate the closed forms as printed in the source derivation; the
    ``exact_*`` functions rebuild the moments from the binomial edge-group
    decomposition: given the conditioning sizes every edge group count is an
    independent binomial, and the statistics are linear in those counts.
    For the pair case the printed mean and variance disagree with the
    decomposition; `compare_moments` reports the difference instead of
    choosing one.
"""

from __future__ import absolute_import

import math
from fractions import Fraction

import numpy as np

from .exc import ParameterError
from .graph import check_count, check_probability
from .groupie import (NeighborhoodStats, PAIR_GROUPS, PairPartitionStats,
                      pair_statistics, single_vertex_statistic)
from .payload import Payload, PType


class MomentSummary(Payload):
    payload_spec = {
        1: (PType.DOUBLE, 'mean', False),
        2: (PType.DOUBLE, 'variance', False),
        3: (PType.DOUBLE, 'covariance', False),
    }
    default_spec = [('mean', None), ('variance', None), ('covariance', None)]


class PairMoments(Payload):
    payload_spec = {
        1: (PType.STRUCT, 'b1', MomentSummary, False),
        2: (PType.STRUCT, 'b2', MomentSummary, False),
        3: (PType.DOUBLE, 'covariance', False),
    }
    default_spec = [('b1', None), ('b2', None), ('covariance', None)]

    def __iter__(self):
        return iter((self.b1, self.b2, self.covariance))


class Discrepancy(Payload):
    payload_spec = {
        1: (PType.STRING, 'quantity', False),
        2: (PType.DOUBLE, 'printed', False),
        3: (PType.DOUBLE, 'exact', False),
        4: (PType.DOUBLE, 'absolute', False),
        5: (PType.DOUBLE, 'relative', False),
    }
    default_spec = [('quantity', None), ('printed', None), ('exact', None),
                    ('absolute', None), ('relative', None)]


def _probability(p, exact):
    if exact:
        if isinstance(p, float):
            p = Fraction(repr(p))
        p = Fraction(p)
        if not 0 <= p <= 1:
            raise ParameterError(ParameterError.INVALID_PROBABILITY,
                                 'p must lie in [0, 1], got %s' % p)
        return p
    return check_probability(p)


def _check_single(n, i, p, exact):
    n = check_count(n, 'n', minimum=2)
    i = check_count(i, 'i', minimum=0)
    if i > n - 1:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Degree i=%d out of range 0..%d' % (i, n - 1))
    return n, i, _probability(p, exact)


def _check_pair(n, i1, i2, i3, p, exact):
    n = check_count(n, 'n', minimum=2)
    i1 = check_count(i1, 'i1', minimum=0)
    i2 = check_count(i2, 'i2', minimum=0)
    i3 = check_count(i3, 'i3', minimum=0)
    if i1 + i2 + i3 > n - 2:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Partition sizes i1+i2+i3=%d exceed n-2=%d'
                             % (i1 + i2 + i3, n - 2))
    return n, i1, i2, i3, _probability(p, exact)


def _pairs(k):
    return k * (k - 1) // 2


def _finish(value, exact):
    return value if exact else float(value)


def single_vertex_moments(n, i, p, exact=False):
    """Printed conditional mean and variance of S given deg(v) = i."""
    n, i, p = _check_single(n, i, p, exact)
    q = p - p * p
    mean = i * ((n - 2) * p + (n - 2 * i))
    variance = ((2 * (n - i)) ** 2 * _pairs(i)
                + (n - 2 * i) ** 2 * i * (n - 1 - i)
                + (2 * i) ** 2 * _pairs(n - 1 - i)) * q
    return MomentSummary(mean=_finish(mean, exact),
                         variance=_finish(variance, exact))


def single_vertex_groups(n, i):
    """(constant, [(coefficient, trials), ...]) of S as a linear form in the
    independent counts e1 ~ Bin(C(i,2)), e3 ~ Bin(i(n-1-i)),
    e2 ~ Bin(C(n-1-i,2)).
    """
    rest = n - 1 - i
    return (n - 2 * i) * i, [
        (2 * (n - i), _pairs(i)),
        (n - 2 * i, i * rest),
        (-2 * i, _pairs(rest)),
    ]


def _linear_moments(constant, groups, p):
    q = p - p * p
    mean = constant + p * sum(c * t for c, t in groups)
    variance = q * sum(c * c * t for c, t in groups)
    return mean, variance


def exact_single_vertex_moments(n, i, p, exact=False):
    n, i, p = _check_single(n, i, p, exact)
    constant, groups = single_vertex_groups(n, i)
    mean, variance = _linear_moments(constant, groups, p)
    return MomentSummary(mean=_finish(mean, exact),
                         variance=_finish(variance, exact))


def printed_pair_moments(n, i1, i2, i3, p, exact=False):
    """Printed conditional moments of (B1, B2) given (i1, i2, i3),
    evaluated term for term.
    """
    n, i1, i2, i3, p = _check_pair(n, i1, i2, i3, p, exact)
    q = p - p * p
    i4 = n - 2 - i1 - i2 - i3
    d1 = i1 + i2 + 1
    d2 = i3 + i2 + 1

    def mean(d):
        return (n - d) * ((n - 2) * p + (n - 2 * d))

    def variance(d):
        return ((2 * (n - d)) ** 2 * d * (d - 1) // 2
                + (n - 2 * d) ** 2 * d * (n - 1 - d)
                + (2 * d) ** 2 * (n - 1 - d) * (n - 2 - d) // 2) * q

    cov = (-4 * (n - d1) * d2 * _pairs(i1)
           + 4 * (n - d1) * (n - d2) * _pairs(i2)
           - 4 * (n - d2) * d1 * _pairs(i3)
           + 4 * d1 * d2 * _pairs(i4)
           + 2 * (n - d1) * (n - 2 * d2) * i1 * i2
           + (n - 2 * d1) * (n - 2 * d2) * i1 * i3
           - 2 * (n - 2 * d1) * d2 * i1 * i4
           + 2 * (n - d2) * (n - 2 * d1) * i2 * i3
           + (n - 2 * d1) * (n - 2 * d2) * i2 * i4
           - 2 * d1 * (n - 2 * d2) * i3 * i4) * q
    cov = _finish(cov, exact)
    return PairMoments(
        b1=MomentSummary(mean=_finish(mean(d1), exact),
                         variance=_finish(variance(d1), exact),
                         covariance=cov),
        b2=MomentSummary(mean=_finish(mean(d2), exact),
                         variance=_finish(variance(d2), exact),
                         covariance=cov),
        covariance=cov)


def pair_groups(n, i1, i2, i3):
    """Linear forms of B1 and B2 over the ten independent edge groups.

    Returns (constant1, coefficients1, constant2, coefficients2, trials)
    where the dicts are keyed by the (j, k) group labels.
    """
    i4 = n - 2 - i1 - i2 - i3
    sizes = {1: i1, 2: i2, 3: i3, 4: i4}
    trials = dict(((j, k), _pairs(sizes[j]) if j == k
                   else sizes[j] * sizes[k]) for j, k in PAIR_GROUPS)
    total = i1 + i2 + i3 + 1

    def form(own, d):
        # own: the private class of the endpoint
        inner = 2 * (n - d)
        cross = n - 2 * d
        outer = -2 * d
        coefficients = {}
        for j, k in PAIR_GROUPS:
            members = {j, k}
            if members <= {own, 2}:
                coefficients[(j, k)] = inner
            elif members & {own, 2}:
                coefficients[(j, k)] = cross
            else:
                coefficients[(j, k)] = outer
        return inner * i2 + cross * total, coefficients

    const1, coef1 = form(1, i1 + i2 + 1)
    const2, coef2 = form(3, i3 + i2 + 1)
    return const1, coef1, const2, coef2, trials


def exact_pair_moments(n, i1, i2, i3, p, exact=False):
    n, i1, i2, i3, p = _check_pair(n, i1, i2, i3, p, exact)
    q = p - p * p
    const1, coef1, const2, coef2, trials = pair_groups(n, i1, i2, i3)
    mean1, var1 = _linear_moments(
        const1, [(coef1[g], trials[g]) for g in PAIR_GROUPS], p)
    mean2, var2 = _linear_moments(
        const2, [(coef2[g], trials[g]) for g in PAIR_GROUPS], p)
    cov = q * sum(coef1[g] * coef2[g] * trials[g] for g in PAIR_GROUPS)
    cov = _finish(cov, exact)
    return PairMoments(
        b1=MomentSummary(mean=_finish(mean1, exact),
                         variance=_finish(var1, exact), covariance=cov),
        b2=MomentSummary(mean=_finish(mean2, exact),
                         variance=_finish(var2, exact), covariance=cov),
        covariance=cov)


def _discrepancy(quantity, printed, exact):
    printed = float(printed)
    exact = float(exact)
    absolute = abs(printed - exact)
    if exact != 0:
        relative = absolute / abs(exact)
    else:
        relative = 0.0 if absolute == 0 else None
    return Discrepancy(quantity=quantity, printed=printed, exact=exact,
                       absolute=absolute, relative=relative)


def compare_moments(printed, exact):
    """Discrepancy rows between a printed and an exact moment result
    (either two MomentSummary or two PairMoments values).
    """
    if isinstance(printed, PairMoments):
        rows = []
        for label in ('b1', 'b2'):
            p, e = getattr(printed, label), getattr(exact, label)
            rows.append(_discrepancy(label + '.mean', p.mean, e.mean))
            rows.append(_discrepancy(label + '.variance',
                                     p.variance, e.variance))
        rows.append(_discrepancy('covariance', printed.covariance,
                                 exact.covariance))
        return rows
    return [_discrepancy('mean', printed.mean, exact.mean),
            _discrepancy('variance', printed.variance, exact.variance)]


def sample_single_vertex_statistic(n, i, p, draws, seed):
    """Draws of S under the conditional model given deg(v) = i."""
    n, i, p = _check_single(n, i, p, False)
    rng = np.random.default_rng(seed)
    rest = n - 1 - i
    stats = NeighborhoodStats(
        v=0, i=i,
        e1=rng.binomial(_pairs(i), p, size=draws),
        e2=rng.binomial(_pairs(rest), p, size=draws),
        e3=rng.binomial(i * rest, p, size=draws))
    return single_vertex_statistic(stats, n)


def sample_pair_statistics(n, i1, i2, i3, p, draws, seed):
    """Draws of (B1, B2) for an adjacent pair under the conditional model:
    the ten edge group counts are sampled as independent binomials and
    passed through `pair_statistics`.
    """
    n, i1, i2, i3, p = _check_pair(n, i1, i2, i3, p, False)
    rng = np.random.default_rng(seed)
    trials = pair_groups(n, i1, i2, i3)[4]
    counts = dict(('e%d%d' % g, rng.binomial(trials[g], p, size=draws))
                  for g in PAIR_GROUPS)
    stats = PairPartitionStats(v1=0, v2=1, adjacent=True, i1=i1, i2=i2,
                               i3=i3, i4=n - 2 - i1 - i2 - i3, **counts)
    b1, b2 = pair_statistics(stats, n)
    return np.asarray(b1, dtype=np.int64), np.asarray(b2, dtype=np.int64)


def cauchy_schwarz_holds(moments, tolerance=1e-9):
    bound = math.sqrt(float(moments.b1.variance) * float(moments.b2.variance))
    return abs(float(moments.covariance)) <= bound * (1 + tolerance) \
        + tolerance
