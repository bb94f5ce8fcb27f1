# -*- coding: utf-8 -*-

"""
    groupiepy.montecarlo
    ~~~~~~~~~~~~~~~~~~~~

    Reproducible simulation of many independent graph trials.

    Trial ``t`` of a run with master seed ``s`` samples its graph with seed
    ``derive_seed(s, t)``, so a run is a pure function of
    (params, trials, seed) whatever the chunking or the number of workers.
    Each estimate keeps integer accumulators (trial count, sum and sum of
    squares of the per-trial counts); merging two estimates adds them.
"""

from __future__ import absolute_import

import logging
import math
from fractions import Fraction

import numpy as np
from joblib import Parallel, cpu_count, delayed

from .asymptotics import predict_limit
from .exc import ParameterError
from .graph import (BIPARTITE, GNP, ModelParams, check_count,
                    check_probability, generate)
from .groupie import count_groupies, groupie_flags
from .payload import Payload, PType
from .rng import check_seed, derive_seed

logger = logging.getLogger(__name__)

Z_95 = 1.96

# trial chunks handed to every worker
CHUNKS_PER_JOB = 4

GROUPIE_PROPORTION = 'groupie-proportion'
ISOLATED_FREQUENCY = 'isolated-frequency'


class SimulationEstimate(Payload):
    payload_spec = {
        1: (PType.STRUCT, 'params', ModelParams, False),
        2: (PType.STRING, 'quantity', False),
        3: (PType.INT, 'trials', False),
        4: (PType.INT, 'seed', False),
        5: (PType.INT, 'first_trial', False),
        6: (PType.DOUBLE, 'mean', False),
        7: (PType.DOUBLE, 'sample_std', False),
        8: (PType.DOUBLE, 'stderr', False),
        9: (PType.DOUBLE, 'ci95_low', False),
        10: (PType.DOUBLE, 'ci95_high', False),
        11: (PType.LIST, 'per_trial', PType.DOUBLE, False),
        12: (PType.INT, 'scale', False),
        13: (PType.INT, 'total', False),
        14: (PType.INT, 'total_sq', False),
    }
    default_spec = [('params', None), ('quantity', GROUPIE_PROPORTION),
                    ('trials', 0), ('seed', None), ('first_trial', 0),
                    ('mean', None), ('sample_std', None), ('stderr', None),
                    ('ci95_low', None), ('ci95_high', None),
                    ('per_trial', None), ('scale', 1), ('total', 0),
                    ('total_sq', 0)]

    @classmethod
    def from_counts(cls, params, quantity, seed, first_trial, counts, scale,
                    keep_trials=False):
        counts = [int(c) for c in counts]
        per_trial = [c / scale for c in counts] if keep_trials else None
        return cls._summarize(
            params=params, quantity=quantity, trials=len(counts), seed=seed,
            first_trial=first_trial, scale=scale, total=sum(counts),
            total_sq=sum(c * c for c in counts), per_trial=per_trial)

    @classmethod
    def _summarize(cls, trials, total, total_sq, scale, **fields):
        mean = Fraction(total, trials * scale)
        if trials > 1:
            spread = Fraction(total_sq * trials - total * total,
                              trials * (trials - 1) * scale * scale)
            sample_std = math.sqrt(spread)
        else:
            sample_std = 0.0
        stderr = sample_std / math.sqrt(trials)
        mean = float(mean)
        return cls(trials=trials, total=total, total_sq=total_sq,
                   scale=scale, mean=mean, sample_std=sample_std,
                   stderr=stderr, ci95_low=mean - Z_95 * stderr,
                   ci95_high=mean + Z_95 * stderr, **fields)

    def merge(self, other):
        """Estimate over the trials of both runs."""
        if not isinstance(other, SimulationEstimate) \
                or other.params != self.params \
                or other.quantity != self.quantity \
                or other.scale != self.scale:
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Only estimates of the same quantity on '
                                 'the same model can be merged')
        first, second = sorted((self, other), key=lambda e: e.first_trial)
        per_trial = None
        if first.per_trial is not None and second.per_trial is not None:
            per_trial = list(first.per_trial) + list(second.per_trial)
        return SimulationEstimate._summarize(
            params=self.params, quantity=self.quantity,
            trials=self.trials + other.trials, seed=first.seed,
            first_trial=first.first_trial, scale=self.scale,
            total=self.total + other.total,
            total_sq=self.total_sq + other.total_sq, per_trial=per_trial)


class SweepRow(Payload):
    payload_spec = {
        1: (PType.STRING, 'model', False),
        2: (PType.INT, 'n', False),
        3: (PType.INT, 'n1', False),
        4: (PType.INT, 'n2', False),
        5: (PType.DOUBLE, 'p', False),
        6: (PType.INT, 'trials', False),
        7: (PType.DOUBLE, 'mean', False),
        8: (PType.DOUBLE, 'stderr', False),
        9: (PType.DOUBLE, 'predicted', False),
        10: (PType.DOUBLE, 'deviation', False),
        11: (PType.DOUBLE, 'sample_std', False),
    }
    default_spec = [('model', GNP), ('n', None), ('n1', None), ('n2', None),
                    ('p', None), ('trials', None), ('mean', None),
                    ('stderr', None), ('predicted', None),
                    ('deviation', None), ('sample_std', None)]


def _groupie_count(graph):
    return count_groupies(graph)


def _has_isolated(graph):
    return int(np.any(graph.degrees == 0))


def _trial_seed(seed, t):
    return derive_seed(seed, t)


def _run_chunk(params, seed, start, stop, measure):
    return [measure(generate(params, _trial_seed(seed, t)))
            for t in range(start, stop)]


def _chunks(start, stop, n_jobs):
    trials = stop - start
    workers = n_jobs if n_jobs > 0 else max(1, cpu_count() + 1 + n_jobs)
    pieces = min(trials, workers * CHUNKS_PER_JOB)
    bounds = np.linspace(start, stop, pieces + 1).round().astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:])
            if b > a]


def check_jobs(n_jobs):
    if isinstance(n_jobs, bool) or not isinstance(n_jobs, (int, np.integer)) \
            or n_jobs == 0:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'n_jobs must be a nonzero integer, got %r'
                             % (n_jobs,))
    return int(n_jobs)


def _collect(params, seed, first_trial, trials, measure, n_jobs):
    n_jobs = check_jobs(n_jobs)
    chunks = _chunks(first_trial, first_trial + trials, n_jobs)
    logger.debug('%d trials of %r in %d chunks on n_jobs=%s',
                 trials, params, len(chunks), n_jobs)
    results = Parallel(n_jobs=n_jobs)(
        delayed(_run_chunk)(params, seed, a, b, measure) for a, b in chunks)
    # joblib returns results in submission order
    return [value for chunk in results for value in chunk]


def _check_run(params, trials, seed, first_trial, minimum=1):
    if not isinstance(params, ModelParams):
        raise ParameterError(ParameterError.DEGENERATE,
                             'Expected ModelParams, got %r' % (params,))
    params = params.validate()
    trials = check_count(trials, 'trials', minimum=minimum)
    first_trial = check_count(first_trial, 'first_trial', minimum=0)
    return params, trials, check_seed(seed), first_trial


def run_trials(params, trials, seed, keep_trials=False, n_jobs=1,
               first_trial=0):
    """Estimate the groupie proportion N(n)/n over `trials` sampled graphs.

    :param params: a :class:`~groupiepy.graph.ModelParams`.
    :param seed: master seed; trial ``t`` uses ``derive_seed(seed, t)``.
    :param keep_trials: keep every per-trial proportion.
    :param n_jobs: joblib worker count; has no effect on the result.
    :param first_trial: index of the first trial, for split runs.
    """
    params, trials, seed, first_trial = _check_run(params, trials, seed,
                                                   first_trial)
    counts = _collect(params, seed, first_trial, trials, _groupie_count,
                      n_jobs)
    estimate = SimulationEstimate.from_counts(
        params, GROUPIE_PROPORTION, seed, first_trial, counts,
        scale=params.vertex_count, keep_trials=keep_trials)
    logger.debug('groupie proportion %.6f +- %.6f', estimate.mean,
                 estimate.stderr)
    return estimate


def estimate_isolated_frequency(params, trials, seed, keep_trials=False,
                                n_jobs=1, first_trial=0):
    """Fraction of sampled graphs with at least one isolated vertex."""
    params, trials, seed, first_trial = _check_run(params, trials, seed,
                                                   first_trial)
    hits = _collect(params, seed, first_trial, trials, _has_isolated, n_jobs)
    return SimulationEstimate.from_counts(
        params, ISOLATED_FREQUENCY, seed, first_trial, hits, scale=1,
        keep_trials=keep_trials)


class _PairIndicators(object):

    def __init__(self, v0, v1):
        self.v0 = v0
        self.v1 = v1

    def __call__(self, graph):
        flags = groupie_flags(graph)
        return int(flags[self.v0]), int(flags[self.v1])


def estimate_pair_covariance(params, trials, seed, v0=0, v1=1, n_jobs=1):
    """Sample covariance of the groupie indicators of `v0` and `v1`."""
    params, trials, seed, _ = _check_run(params, trials, seed, 0, minimum=2)
    for name, v in (('v0', v0), ('v1', v1)):
        v = check_count(v, name, minimum=0)
        if v >= params.vertex_count:
            raise ParameterError(ParameterError.INVALID_VERTEX,
                                 '%s=%d out of range 0..%d'
                                 % (name, v, params.vertex_count - 1))
    if v0 == v1:
        raise ParameterError(ParameterError.DEGENERATE,
                             'Covariance needs two distinct vertices')

    pairs = _collect(params, seed, 0, trials, _PairIndicators(v0, v1),
                     n_jobs)
    sx = sum(x for x, _ in pairs)
    sy = sum(y for _, y in pairs)
    sxy = sum(x * y for x, y in pairs)
    cov = Fraction(sxy * trials - sx * sy, trials * (trials - 1))
    return float(cov)


def _sweep_params(model, size, p):
    if model == GNP:
        return ModelParams.gnp(size, p)
    if model == BIPARTITE:
        try:
            n1, n2 = size
        except (TypeError, ValueError):
            raise ParameterError(ParameterError.OUT_OF_RANGE,
                                 'Bipartite sizes must be (n1, n2) pairs, '
                                 'got %r' % (size,))
        return ModelParams.bipartite(n1, n2, p)
    raise ParameterError(ParameterError.OUT_OF_RANGE,
                         'Unknown model %r' % (model,))


def convergence_sweep(model, sizes, p, trials, seed, n_jobs=1):
    """One :class:`SweepRow` per size, in the given order.

    Sizes are vertex counts for ``gnp`` and ``(n1, n2)`` pairs for
    ``bipartite``. Every row is simulated with the same master seed.
    """
    sizes = list(sizes)
    if not sizes:
        raise ParameterError(ParameterError.DEGENERATE,
                             'Sweep needs at least one size')
    p = check_probability(p)
    if not 0.0 < p < 1.0:
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             'Limit predictions need 0 < p < 1, got %r' % p)
    rows = []
    for size in sizes:
        params = _sweep_params(model, size, p)
        predicted = predict_limit(params).value
        estimate = run_trials(params, trials, seed, n_jobs=n_jobs)
        rows.append(SweepRow(
            model=params.variant, n=params.vertex_count, n1=params.n1,
            n2=params.n2, p=params.p, trials=estimate.trials,
            mean=estimate.mean, stderr=estimate.stderr, predicted=predicted,
            deviation=abs(estimate.mean - predicted),
            sample_std=estimate.sample_std))
    return rows
