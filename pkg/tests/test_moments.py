# -*- coding: utf-8 -*-

import math
from fractions import Fraction

import numpy as np
import pytest
from groupiepy.exc import ParameterError
from groupiepy.moments import (cauchy_schwarz_holds, compare_moments,
                               exact_pair_moments,
                               exact_single_vertex_moments,
                               printed_pair_moments, sample_pair_statistics,
                               sample_single_vertex_statistic,
                               single_vertex_moments)


def test_single_vertex_example():
    summary = single_vertex_moments(10, 5, 0.5)
    assert summary.mean == 20
    assert summary.variance == 400


def test_single_vertex_boundaries():
    # degree 0: S is identically zero
    summary = single_vertex_moments(6, 0, 0.3)
    assert summary.mean == 0 and summary.variance == 0
    # p = 0 and p = 1 leave no randomness
    assert single_vertex_moments(8, 3, 0.0).variance == 0
    assert single_vertex_moments(8, 3, 1.0).variance == 0


@pytest.mark.parametrize('p', ['1/10', '3/10', '1/2', '7/10', '9/10'])
def test_printed_single_vertex_moments_are_exact(p):
    p = Fraction(p)
    for n in range(2, 13):
        for i in range(n):
            assert single_vertex_moments(n, i, p, exact=True) == \
                exact_single_vertex_moments(n, i, p, exact=True)


def test_float_and_exact_agree():
    exact = single_vertex_moments(11, 4, 0.3, exact=True)
    approx = single_vertex_moments(11, 4, 0.3)
    assert float(exact.mean) == pytest.approx(approx.mean, rel=1e-12)
    assert float(exact.variance) == pytest.approx(approx.variance, rel=1e-12)


def test_pair_example_n4():
    printed = printed_pair_moments(4, 0, 0, 0, 0.5)
    exact = exact_pair_moments(4, 0, 0, 0, 0.5)
    assert printed.b1.mean == 9
    assert exact.b1.mean == 1
    assert printed.b1.variance == pytest.approx(3.0)
    assert exact.b1.variance == pytest.approx(1.0)
    assert printed.covariance == pytest.approx(exact.covariance)
    assert exact.covariance == pytest.approx(1.0)


def test_pair_exact_rational():
    moments = exact_pair_moments(4, 0, 0, 0, Fraction(1, 3), exact=True)
    assert moments.b1.mean == Fraction(4, 3)
    assert moments.b1.variance == Fraction(8, 9)
    b1, b2, cov = moments
    assert b1 == b2 and cov == Fraction(8, 9)


def test_pair_covariance_matches_decomposition():
    for n in range(2, 9):
        for i1 in range(n - 1):
            for i2 in range(n - 1 - i1):
                for i3 in range(n - 1 - i1 - i2):
                    p = Fraction(2, 7)
                    printed = printed_pair_moments(n, i1, i2, i3, p,
                                                   exact=True)
                    exact = exact_pair_moments(n, i1, i2, i3, p, exact=True)
                    assert printed.covariance == exact.covariance


@pytest.mark.parametrize('moments', [printed_pair_moments, exact_pair_moments])
def test_pair_moments_swap_sides(moments):
    p = Fraction(3, 10)
    for n, i1, i2, i3 in [(4, 0, 0, 1), (9, 1, 2, 4), (20, 4, 5, 6)]:
        forward = moments(n, i1, i2, i3, p, exact=True)
        backward = moments(n, i3, i2, i1, p, exact=True)
        assert backward.b1 == forward.b2
        assert backward.b2 == forward.b1
        assert backward.covariance == forward.covariance


def test_discrepancy_report():
    rows = compare_moments(printed_pair_moments(4, 0, 0, 0, 0.5),
                           exact_pair_moments(4, 0, 0, 0, 0.5))
    by_name = dict((r.quantity, r) for r in rows)
    assert len(rows) == 5
    assert by_name['b1.mean'].absolute == 8
    assert by_name['b1.mean'].relative == 8
    assert by_name['covariance'].absolute == pytest.approx(0.0)

    rows = compare_moments(single_vertex_moments(10, 5, 0.5),
                           exact_single_vertex_moments(10, 5, 0.5))
    assert [r.absolute for r in rows] == [0.0, 0.0]


def test_sampled_single_vertex_moments():
    draws = sample_single_vertex_statistic(10, 5, 0.5, 100000, seed=1)
    assert abs(draws.mean() - 20) < 4 * math.sqrt(400 / 100000)
    assert draws.var(ddof=1) == pytest.approx(400, rel=0.05)


@pytest.mark.parametrize('n,i1,i2,i3,p', [
    (12, 3, 2, 2, 0.4),
    (10, 0, 4, 1, 0.5),
    (15, 5, 0, 5, 0.2),
    (8, 1, 1, 1, 0.7),
])
def test_sampled_pair_moments(n, i1, i2, i3, p):
    draws = 100000
    b1, b2 = sample_pair_statistics(n, i1, i2, i3, p, draws, seed=17)
    moments = exact_pair_moments(n, i1, i2, i3, p)

    for sample, summary in ((b1, moments.b1), (b2, moments.b2)):
        stderr = math.sqrt(summary.variance / draws)
        assert abs(sample.mean() - summary.mean) <= 4 * stderr
        assert sample.var(ddof=1) == pytest.approx(summary.variance,
                                                   rel=0.05)

    cov = np.cov(b1, b2)[0, 1]
    spread = math.sqrt(2 * moments.b1.variance * moments.b2.variance / draws)
    assert abs(cov - moments.covariance) <= 4 * spread


def test_cauchy_schwarz():
    for n in range(2, 9):
        for i1 in range(n - 1):
            for i2 in range(n - 1 - i1):
                for i3 in range(n - 1 - i1 - i2):
                    assert cauchy_schwarz_holds(
                        exact_pair_moments(n, i1, i2, i3, 0.3))


@pytest.mark.parametrize('call', [
    lambda: single_vertex_moments(5, 7, 0.5),
    lambda: single_vertex_moments(1, 0, 0.5),
    lambda: single_vertex_moments(5, -1, 0.5),
    lambda: single_vertex_moments(5, 2, 1.2),
    lambda: exact_pair_moments(5, 2, 1, 1, 0.5),
    lambda: printed_pair_moments(5, 0, 0, 0, Fraction(3, 2), exact=True),
])
def test_invalid_ranges(call):
    with pytest.raises(ParameterError):
        call()
