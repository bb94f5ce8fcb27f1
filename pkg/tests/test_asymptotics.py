# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest
from groupiepy.asymptotics import (DiscreteDistribution, balanced_shift_limit,
                                   berry_esseen_bound,
                                   bipartite_unbalanced_limit,
                                   conditional_normal_approximation,
                                   convolution_bound_check,
                                   finite_size_prediction, gnp_limit,
                                   isolated_vertex_bound, normal_cdf,
                                   predict_limit, sup_cdf_distance)
from groupiepy.exc import ParameterError, ResourceError
from groupiepy.graph import ModelParams
from groupiepy.moments import single_vertex_moments

PHI_1 = 0.8413447460685429


def test_normal_cdf():
    assert normal_cdf(0) == 0.5
    assert normal_cdf(1) == pytest.approx(PHI_1, abs=1e-15)
    assert normal_cdf(-1.959963984540054) == pytest.approx(0.025, abs=1e-12)
    grid = np.linspace(-8, 8, 161)
    values = [normal_cdf(x) for x in grid]
    assert all(a <= b for a, b in zip(values, values[1:]))
    for x in grid:
        assert abs(normal_cdf(x) + normal_cdf(-x) - 1) < 1e-12


def test_normal_cdf_rejects_non_finite():
    for x in (float('nan'), float('inf'), 'one'):
        with pytest.raises(ParameterError):
            normal_cdf(x)


def test_gnp_limit():
    prediction = gnp_limit()
    assert prediction.value == pytest.approx(0.841344746, abs=1e-9)
    assert prediction.regime == 'gnp'


def test_bipartite_unbalanced_limit():
    assert bipartite_unbalanced_limit(2).value == pytest.approx(2 / 3)
    assert bipartite_unbalanced_limit(1).value == 0.5
    assert bipartite_unbalanced_limit(0).value == 1.0
    for alpha in (0.1, 0.5, 0.9, 1.7, 3.0, 12.0):
        assert bipartite_unbalanced_limit(alpha).value == \
            pytest.approx(bipartite_unbalanced_limit(1 / alpha).value)
    with pytest.raises(ParameterError):
        bipartite_unbalanced_limit(-1)


def test_balanced_shift_limit():
    assert balanced_shift_limit(0.3, 0).value == gnp_limit().value
    value = balanced_shift_limit(0.5, 4).value
    assert value == pytest.approx(0.5 * (normal_cdf(3) + normal_cdf(-1)))
    assert value == pytest.approx(0.57866, abs=1e-5)

    values = [balanced_shift_limit(0.5, c).value for c in range(11)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert values[-1] > 0.5
    for c in range(11):
        assert balanced_shift_limit(0.5, -c).value == \
            pytest.approx(values[c], abs=1e-15)

    for p in (0.0, 1.0):
        with pytest.raises(ParameterError):
            balanced_shift_limit(p, 1)
    with pytest.raises(ParameterError):
        balanced_shift_limit(0.5, 1.5)


def test_predict_limit_regimes():
    assert predict_limit(ModelParams.gnp(100, 0.3)).regime == 'gnp'

    balanced = predict_limit(ModelParams.bipartite(800, 804, 0.5))
    assert balanced.regime == 'bipartite-balanced-shift'
    assert balanced.c == -4
    assert balanced.value == pytest.approx(0.57866, abs=1e-5)

    unbalanced = predict_limit(ModelParams.bipartite(400, 200, 0.5))
    assert unbalanced.regime == 'bipartite-unbalanced'
    assert unbalanced.value == pytest.approx(2 / 3)


def test_conditional_normal_approximation():
    # deg 0: S is the constant 0
    assert conditional_normal_approximation(10, 0, 0.5) == 1.0
    assert conditional_normal_approximation(10, 5, 0.5) == \
        pytest.approx(normal_cdf(1.0))


def test_finite_size_prediction_tends_to_phi_1():
    small = finite_size_prediction(50, 0.5)
    large = finite_size_prediction(2000, 0.5)
    assert small.regime == 'finite' and small.n == 50
    assert 0 <= small.value <= 1
    assert abs(large.value - PHI_1) < abs(small.value - PHI_1) + 1e-3
    assert abs(large.value - PHI_1) < 0.01


def test_isolated_vertex_bound():
    assert isolated_vertex_bound(2, 0.5) == 1.0
    assert isolated_vertex_bound(100, 0.1) == pytest.approx(0.002951, abs=1e-6)
    assert isolated_vertex_bound(10, 1.0) == 0.0


def test_berry_esseen_bound():
    assert berry_esseen_bound(0.5, 10000) == pytest.approx(0.0056)
    bounds = [berry_esseen_bound(0.3, e) for e in (1, 10, 100, 1000)]
    assert all(a > b for a, b in zip(bounds, bounds[1:]))
    for p in np.linspace(0.05, 0.95, 19):
        assert berry_esseen_bound(0.5, 100) <= berry_esseen_bound(p, 100)
    assert berry_esseen_bound(0.5, 100, constant=1.0) == pytest.approx(0.1)
    for p in (0.0, 1.0):
        with pytest.raises(ParameterError):
            berry_esseen_bound(p, 100)


def test_discrete_distribution():
    d = DiscreteDistribution([1.0, 0.0, 1.0], [0.25, 0.5, 0.25])
    assert d.points.tolist() == [0.0, 1.0]
    assert d.probs.tolist() == [0.5, 0.5]
    assert d.cdf(-1) == 0.0
    assert d.cdf(0.5) == 0.5
    assert d.cdf(7) == pytest.approx(1.0)

    with pytest.raises(ParameterError):
        DiscreteDistribution([0.0, 1.0], [0.5, 0.6])
    with pytest.raises(ParameterError):
        DiscreteDistribution([], [])
    with pytest.raises(ParameterError):
        DiscreteDistribution([0.0], [-1.0])


def test_sup_cdf_distance():
    bern = DiscreteDistribution.bernoulli
    assert sup_cdf_distance(bern(0.3), bern(0.3)) == 0
    assert sup_cdf_distance(bern(0.3), bern(0.5)) == pytest.approx(0.2)
    assert sup_cdf_distance(DiscreteDistribution.point_mass(0),
                            DiscreteDistribution.point_mass(1)) == 1


def test_convolution_bound_worked_example():
    bern = DiscreteDistribution.bernoulli
    check = convolution_bound_check([bern(0.3), bern(0.3)],
                                    [bern(0.5), bern(0.5)])
    assert check.rhs == pytest.approx(0.4)
    assert check.lhs == pytest.approx(0.24)
    assert check.holds

    same = convolution_bound_check([bern(0.2)] * 3, [bern(0.2)] * 3)
    assert same.lhs == 0 and same.holds


def test_convolution_bound_random():
    rng = np.random.default_rng(99)
    bern = DiscreteDistribution.bernoulli
    for _ in range(100):
        k = int(rng.integers(1, 9))
        check = convolution_bound_check(
            [bern(float(q)) for q in rng.random(k)],
            [bern(float(q)) for q in rng.random(k)])
        assert check.holds


def test_convolution_bound_limits():
    wide = DiscreteDistribution(np.arange(100.0), np.full(100, 0.01))
    with pytest.raises(ResourceError):
        convolution_bound_check([wide] * 4, [wide] * 4)
    with pytest.raises(ParameterError):
        convolution_bound_check([wide], [])


def test_normal_ratio_of_conditional_moments():
    # mean / sigma of S at i = (n-1)p tends to 1
    ratios = []
    for n in (101, 1001, 10001):
        i = (n - 1) // 2
        s = single_vertex_moments(n, i, 0.5)
        ratios.append(s.mean / math.sqrt(s.variance))
    assert abs(ratios[-1] - 1) < abs(ratios[0] - 1) + 1e-9
    assert abs(ratios[-1] - 1) < 0.01
