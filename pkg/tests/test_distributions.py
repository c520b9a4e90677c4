#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the hooked power law and the discretised lognormal."""

import math

import numpy as np
import pytest
from scipy import integrate, stats

from citation_fit_step import DlnParams, DomainError, HookedParams
from citation_fit_step import distributions as d


def test_hooked_norm_known_values():
    """1/A = zeta(3, 3) = zeta(3) - 1 - 1/8 for alpha=3, B=2."""
    params = HookedParams(alpha=3.0, b=2.0)
    assert d.hooked_norm(params) == pytest.approx(1 / 0.0770569031595942, rel=1e-10)


def test_hooked_norm_near_one():
    """alpha=2 and B close to 0 approaches zeta(2) - 1."""
    params = HookedParams(alpha=2.0, b=1.0e-9)
    assert d.hooked_norm(params) == pytest.approx(1 / 0.6449340668482264, rel=1e-6)


@pytest.mark.parametrize(
    "alpha,b",
    [(1.05, 0.5), (1.5, 3.0), (2.0, 1.0e-6), (3.0, 2.0), (7.5, 40.0), (50.0, 20.0)],
)
def test_hooked_norm_two_paths(alpha, b):
    params = HookedParams(alpha=alpha, b=b)
    assert d.hooked_norm_direct(params) == pytest.approx(
        d.hooked_norm(params), rel=1e-9
    )


def test_hooked_pmf_first_value():
    params = HookedParams(alpha=3.0, b=2.0)
    assert d.hooked_pmf(1, params) == pytest.approx(0.48065, abs=5e-5)
    assert d.hooked_pmf(1, params) == pytest.approx(
        d.hooked_norm(params) / 27.0, rel=1e-12
    )


def test_normal_cdf():
    assert d.normal_cdf(1.96) == pytest.approx(0.9750021048517795, abs=1e-12)
    assert d.normal_cdf(0.0) == 0.5


def test_dln_known_values():
    params = DlnParams(mu=0.0, sigma=1.0)
    assert d.dln_norm(params) == pytest.approx(0.75589, abs=1e-5)
    expected = (
        stats.norm.cdf(math.log(1.5)) - stats.norm.cdf(math.log(0.5))
    ) / stats.norm.sf(math.log(0.5))
    assert d.dln_pmf(1, params) == pytest.approx(expected, rel=1e-12)
    assert d.dln_pmf(1, params) == pytest.approx(0.5468, abs=2e-4)


@pytest.mark.parametrize("mu", [-1.0, 0.0, 1.0, 2.5, 4.0])
@pytest.mark.parametrize("sigma", [0.3, 0.8, 1.2, 2.0])
def test_dln_pmf_against_quadrature(mu, sigma):
    """Each mass is the lognormal density integrated over [n - 1/2, n + 1/2]."""
    params = DlnParams(mu=mu, sigma=sigma)
    density = stats.lognorm(s=sigma, scale=math.exp(mu)).pdf
    norm = d.dln_norm(params)
    n = np.arange(1, 26)
    pmf = d.dln_pmf(n, params)
    for value, mass in zip(n, pmf):
        integral, _ = integrate.quad(
            density, value - 0.5, value + 0.5, epsabs=1e-13, epsrel=1e-12
        )
        assert mass == pytest.approx(integral / norm, abs=1e-8)


def test_logpmf_matches_pmf():
    n = np.arange(1, 200)
    for params in (HookedParams(2.5, 7.0), DlnParams(1.0, 1.5)):
        np.testing.assert_allclose(
            np.exp(d.logpmf(n, params)), d.pmf(n, params), rtol=1e-12
        )


def test_random_hooked_normalisation():
    rng = np.random.default_rng(11)
    n = np.arange(1, 20001)
    for _ in range(100):
        params = HookedParams(
            alpha=rng.uniform(1.2, 6.0), b=math.exp(rng.uniform(-4.6, 4.6))
        )
        total = float(np.sum(d.pmf(n, params)))
        missing = 1.0 - total
        assert missing >= -1e-10
        assert missing <= d.tail_bound(20000, params) + 1e-10
        assert total + d.sf(20000, params) == pytest.approx(1.0, abs=1e-8)


def test_random_dln_normalisation():
    rng = np.random.default_rng(12)
    n = np.arange(1, 20001)
    for _ in range(100):
        params = DlnParams(mu=rng.uniform(-2.0, 4.0), sigma=rng.uniform(0.2, 2.0))
        total = float(np.sum(d.pmf(n, params)))
        assert total + d.tail_bound(20000, params) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("params", [HookedParams(3.0, 2.0), DlnParams(0.5, 0.9)])
def test_cdf_and_sf(params):
    n = np.arange(1, 60)
    cdf = d.cdf(n, params)
    assert np.all(np.diff(cdf) >= 0.0)
    assert cdf[-1] <= 1.0
    np.testing.assert_allclose(cdf + d.sf(n, params), 1.0, atol=1e-12)
    np.testing.assert_allclose(cdf, np.cumsum(d.pmf(n, params)), atol=1e-12)


def _parameter_grid(family, count, seed):
    """The corners of the search box and random points inside it."""
    (lo0, hi0), (lo1, hi1) = d.BOUNDS[family]
    make = DlnParams if family is d.Family.DLN else HookedParams
    points = [make(x, y) for x in (lo0, hi0) for y in (lo1, hi1)]
    rng = np.random.default_rng(seed)
    for _ in range(count):
        if family is d.Family.DLN:
            x = rng.uniform(lo0, hi0)
        else:
            x = 1.0 + np.exp(rng.uniform(np.log(lo0 - 1.0), np.log(hi0 - 1.0)))
        y = np.exp(rng.uniform(np.log(lo1), np.log(hi1)))
        points.append(make(x, y))
    return points


@pytest.mark.parametrize("family", list(d.Family))
def test_cdf_matches_summation_over_the_box(family):
    n = np.arange(1, 1001)
    for params in _parameter_grid(family, 100, seed=17):
        summed = np.cumsum(d.pmf(n, params))
        error = np.max(np.abs(d.cdf(n, params) - summed))
        assert error <= 1e-10, params


def test_tail_bound_decreases():
    params = HookedParams(1.3, 5.0)
    bound = d.tail_bound(np.arange(1, 1000), params)
    assert np.all(np.diff(bound) < 0.0)


def test_scalar_in_scalar_out():
    params = DlnParams(0.0, 1.0)
    assert np.ndim(d.pmf(3, params)) == 0
    assert d.pmf([1, 2], params).shape == (2,)


@pytest.mark.parametrize("n", [0, -3, 1.5])
def test_support_errors(n):
    with pytest.raises(DomainError):
        d.pmf(n, DlnParams(0.0, 1.0))


@pytest.mark.parametrize(
    "alpha,b", [(1.0, 2.0), (0.5, 2.0), (2.0, 0.0), (2.0, -1.0), (math.nan, 1.0)]
)
def test_hooked_parameter_errors(alpha, b):
    with pytest.raises(DomainError):
        HookedParams(alpha=alpha, b=b)


@pytest.mark.parametrize("mu,sigma", [(0.0, 0.0), (0.0, -1.0), (math.inf, 1.0)])
def test_dln_parameter_errors(mu, sigma):
    with pytest.raises(DomainError):
        DlnParams(mu=mu, sigma=sigma)


def test_b_conventions():
    params = HookedParams(alpha=2.0, b=4.0)
    assert params.b_unshifted == 5.0
    assert params.as_tuple() == (2.0, 4.0)


def test_make_params():
    assert d.make_params("dln", (1.0, 2.0)) == DlnParams(1.0, 2.0)
    assert d.make_params(d.Family.HOOKED, (3.0, 2.0)) == HookedParams(3.0, 2.0)
