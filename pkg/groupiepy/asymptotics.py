# -*- coding: utf-8 -*-

"""
    groupiepy.asymptotics
    ~~~~~~~~~~~~~~~~~~~~~

    Limit predictions for the groupie proportion and the analytic bounds
    used to reach them.
"""

from __future__ import absolute_import

import math

import numpy as np
from scipy import special, stats

from .exc import ParameterError, ResourceError
from .graph import BIPARTITE, check_count, check_probability
from .moments import single_vertex_moments
from .payload import Payload, PType

# universal constant of the 1-d Berry-Esseen inequality
DEFAULT_BERRY_ESSEEN_CONSTANT = 0.56

# product of the support sizes a convolution check may expand to
MAX_SUPPORT_PRODUCT = 10 ** 6

PROBABILITY_TOLERANCE = 1e-12

REGIME_GNP = 'gnp'
REGIME_UNBALANCED = 'bipartite-unbalanced'
REGIME_BALANCED_SHIFT = 'bipartite-balanced-shift'
REGIME_FINITE = 'finite'


class LimitPrediction(Payload):
    payload_spec = {
        1: (PType.DOUBLE, 'value', False),
        2: (PType.STRING, 'regime', False),
        3: (PType.DOUBLE, 'alpha', False),
        4: (PType.DOUBLE, 'p', False),
        5: (PType.INT, 'c', False),
        6: (PType.INT, 'n', False),
    }
    default_spec = [('value', None), ('regime', REGIME_GNP), ('alpha', None),
                    ('p', None), ('c', None), ('n', None)]


def _finite(x, name='x'):
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise ParameterError(ParameterError.NOT_FINITE,
                             '%s must be a real number, got %r' % (name, x))
    if not math.isfinite(x):
        raise ParameterError(ParameterError.NOT_FINITE,
                             '%s must be finite, got %r' % (name, x))
    return x


def _open_probability(p):
    p = check_probability(p)
    if not 0.0 < p < 1.0:
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             'p must lie strictly between 0 and 1, got %r'
                             % p)
    return p


def normal_cdf(x):
    """Standard normal CDF through the complementary error function."""
    x = _finite(x)
    return float(0.5 * special.erfc(-x / math.sqrt(2.0)))


def gnp_limit():
    return LimitPrediction(value=normal_cdf(1.0), regime=REGIME_GNP)


def bipartite_unbalanced_limit(alpha):
    """Limit when n1/n2 -> alpha and |n1 - n2| -> infinity."""
    alpha = _finite(alpha, 'alpha')
    if alpha < 0:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'alpha must be non-negative, got %r' % alpha)
    return LimitPrediction(value=max(1.0, alpha) / (1.0 + alpha),
                           regime=REGIME_UNBALANCED, alpha=alpha)


def balanced_shift_limit(p, c):
    """Limit when n1 - n2 = c stays fixed."""
    p = _open_probability(p)
    if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'c must be an integer, got %r' % (c,))
    c = int(c)
    shift = p * c / (2.0 * (1.0 - p))
    value = 0.5 * (normal_cdf(1.0 + shift) + normal_cdf(1.0 - shift))
    return LimitPrediction(value=value, regime=REGIME_BALANCED_SHIFT,
                           p=p, c=c)


def predict_limit(params):
    """Limit prediction matching a model: B(n, p) tends to Phi(1);
    B(n1, n2, p) uses the fixed-shift limit when |n1 - n2| is at most
    sqrt(min(n1, n2)) and the ratio limit otherwise.
    """
    params = params.validate()
    if params.variant != BIPARTITE:
        return gnp_limit()
    c = params.n1 - params.n2
    if abs(c) <= math.sqrt(min(params.n1, params.n2)):
        return balanced_shift_limit(params.p, c)
    return bipartite_unbalanced_limit(params.n1 / params.n2)


def conditional_normal_approximation(n, i, p):
    """Normal approximation of P(v is a groupie | deg(v) = i):
    Phi(mean / sigma) of the single-vertex statistic.
    """
    summary = single_vertex_moments(n, i, p)
    if summary.variance <= 0:
        return 1.0 if summary.mean >= 0 else 0.0
    return normal_cdf(summary.mean / math.sqrt(summary.variance))


def finite_size_prediction(n, p):
    """Average of the conditional normal approximation over
    deg(v) ~ Bin(n - 1, p); tends to Phi(1) as n grows.
    """
    n = check_count(n, 'n', minimum=2)
    p = _open_probability(p)
    degrees = np.arange(n)
    weights = stats.binom.pmf(degrees, n - 1, p)
    value = sum(w * conditional_normal_approximation(n, int(i), p)
                for i, w in zip(degrees, weights) if w > 0)
    return LimitPrediction(value=float(min(1.0, max(0.0, value))),
                           regime=REGIME_FINITE, p=p, n=n)


def isolated_vertex_bound(n, p):
    """Union bound n(1-p)^(n-1) on P(B(n, p) has an isolated vertex)."""
    n = check_count(n, 'n')
    p = check_probability(p)
    return n * (1.0 - p) ** (n - 1)


def berry_esseen_bound(p, edge_trials,
                       constant=DEFAULT_BERRY_ESSEEN_CONSTANT):
    """Uniform CDF distance bound for a binomial count over `edge_trials`
    Bernoulli(p) edges.
    """
    p = _open_probability(p)
    edge_trials = check_count(edge_trials, 'edge_trials')
    constant = _finite(constant, 'constant')
    if constant <= 0:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'constant must be positive, got %r' % constant)
    factor = (p * p + (1.0 - p) ** 2) / math.sqrt(p * (1.0 - p))
    return constant * factor / math.sqrt(edge_trials)


class DiscreteDistribution(object):
    """Finitely supported distribution on the real line."""

    def __init__(self, points, probs):
        points = np.asarray(points, dtype=np.float64).ravel()
        probs = np.asarray(probs, dtype=np.float64).ravel()
        if points.size == 0 or points.shape != probs.shape:
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Support and probabilities must be '
                                 'non-empty and aligned')
        if not np.all(np.isfinite(points)) or not np.all(np.isfinite(probs)):
            raise ParameterError(ParameterError.NOT_FINITE,
                                 'Support and probabilities must be finite')
        if np.any(probs < 0):
            raise ParameterError(ParameterError.INVALID_PROBABILITY,
                                 'Probabilities must be non-negative')
        if abs(probs.sum() - 1.0) > PROBABILITY_TOLERANCE:
            raise ParameterError(ParameterError.INVALID_PROBABILITY,
                                 'Probabilities sum to %r, not 1'
                                 % float(probs.sum()))
        self.points, inverse = np.unique(points, return_inverse=True)
        self.probs = np.bincount(inverse.ravel(), weights=probs,
                                 minlength=self.points.size)

    @classmethod
    def bernoulli(cls, q):
        q = check_probability(q, 'q')
        return cls([0.0, 1.0], [1.0 - q, q])

    @classmethod
    def point_mass(cls, x):
        return cls([_finite(x)], [1.0])

    @property
    def size(self):
        return self.points.size

    def cdf(self, x):
        """F(x) = P(X <= x), vectorised over `x`."""
        cum = np.cumsum(self.probs)
        k = np.searchsorted(self.points, x, side='right')
        return np.where(k > 0, cum[np.maximum(k - 1, 0)], 0.0)

    def convolve(self, other):
        """Distribution of X + Y for independent X ~ self, Y ~ other."""
        points = np.add.outer(self.points, other.points).ravel()
        probs = np.multiply.outer(self.probs, other.probs).ravel()
        return DiscreteDistribution(points, probs / probs.sum())

    def __repr__(self):
        return 'DiscreteDistribution(points=%r, probs=%r)' % (
            self.points.tolist(), self.probs.tolist())


def sup_cdf_distance(f, g):
    """sup_x |F(x) - G(x)|, attained on the merged support."""
    grid = np.union1d(f.points, g.points)
    return float(np.max(np.abs(f.cdf(grid) - g.cdf(grid))))


class ConvolutionCheck(Payload):
    payload_spec = {
        1: (PType.DOUBLE, 'lhs', False),
        2: (PType.DOUBLE, 'rhs', False),
        3: (PType.BOOL, 'holds', False),
    }
    default_spec = [('lhs', None), ('rhs', None), ('holds', None)]


def _sum_distribution(dists):
    total = dists[0]
    for d in dists[1:]:
        total = total.convolve(d)
    return total


def convolution_bound_check(fs, gs, max_support=MAX_SUPPORT_PRODUCT):
    """Compare the CDF distance of two independent sums with the sum of
    the summand-wise distances.
    """
    fs, gs = list(fs), list(gs)
    if not fs or len(fs) != len(gs):
        raise ParameterError(ParameterError.DEGENERATE,
                             'Need two equally long, non-empty lists')
    for dists in (fs, gs):
        product = 1
        for d in dists:
            product *= d.size
            if product > max_support:
                raise ResourceError('Support product exceeds %d'
                                    % max_support, limit=max_support)

    lhs = sup_cdf_distance(_sum_distribution(fs), _sum_distribution(gs))
    rhs = float(sum(sup_cdf_distance(f, g) for f, g in zip(fs, gs)))
    return ConvolutionCheck(lhs=lhs, rhs=rhs,
                            holds=lhs <= rhs + PROBABILITY_TOLERANCE)
