#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for drawing synthetic citation counts."""

import math

import numpy as np
import pytest

from citation_fit_step import (
    DlnParams,
    DomainError,
    HookedParams,
    JournalStructure,
    SyntheticSpec,
    ZeroInflatedModel,
    sample,
)
from citation_fit_step import distributions as d
from citation_fit_step import sampling
from citation_fit_step.evaluation import ks_statistic


def _dkw(n, alpha=1.0e-6):
    """The Dvoretzky-Kiefer-Wolfowitz band for n draws."""
    return math.sqrt(math.log(2.0 / alpha) / (2.0 * n))


def test_inverse_cdf_draw_median():
    assert sampling.inverse_cdf_draw(0.5, DlnParams(0.0, 1.0)) == 1


@pytest.mark.parametrize("params", [DlnParams(2.0, 1.3), HookedParams(1.8, 6.0)])
def test_inverse_cdf_draw_is_smallest(params):
    rng = np.random.default_rng(9)
    u = np.concatenate([rng.random(2000), [1e-12, 0.5, 1.0 - 1e-6]])
    u = u[u > 0.0]
    n = sampling.inverse_cdf_draw(u, params)
    target = 1.0 - u
    assert np.all(d.sf(n, params) <= target)
    previous = n[n > 1] - 1
    assert np.all(d.sf(previous, params) > target[n > 1])


def test_inverse_cdf_draw_monotone():
    u = np.linspace(0.001, 0.999, 500)
    n = sampling.inverse_cdf_draw(u, HookedParams(2.2, 3.0))
    assert np.all(np.diff(n) >= 0)
    assert n.dtype == np.int64


def test_inverse_cdf_draw_bad_u():
    with pytest.raises(DomainError):
        sampling.inverse_cdf_draw([0.2, 1.0], DlnParams(0.0, 1.0))


def test_same_seed_same_sample(dln):
    spec = SyntheticSpec(ZeroInflatedModel(dln, p=0.1), n=5000, seed=99)
    first = sample(spec)
    np.testing.assert_array_equal(first.counts, sample(spec).counts)
    other = sample(SyntheticSpec(ZeroInflatedModel(dln, p=0.1), n=5000, seed=100))
    assert not np.array_equal(first.counts, other.counts)


def test_sample_independent_of_workers(hooked):
    spec = SyntheticSpec(
        ZeroInflatedModel(hooked, p=0.2), n=sampling.BLOCK_SIZE + 5000, seed=1
    )
    serial = sample(spec, workers=1)
    threaded = sample(spec, workers=3)
    np.testing.assert_array_equal(serial.counts, threaded.counts)
    assert serial.n_total == sampling.BLOCK_SIZE + 5000


def test_nearly_all_inflated(dln):
    spec = SyntheticSpec(ZeroInflatedModel(dln, p=1 - 1e-12), n=1000, seed=4)
    assert np.all(sample(spec).counts == 1)


def _check_ones(n, seed):
    base = DlnParams(2.5, 1.2)
    model = ZeroInflatedModel(base, p=0.15)
    data = sample(SyntheticSpec(model, n=n, seed=seed))
    expected = 0.15 + 0.85 * d.pmf(1, base)
    tolerance = 5.0 * math.sqrt(expected * (1.0 - expected) / n)
    assert data.ones / n == pytest.approx(expected, abs=tolerance)


def test_frequency_of_ones():
    _check_ones(200000, 17)


@pytest.mark.slow
def test_frequency_of_ones_large():
    _check_ones(1000000, 18)


@pytest.mark.parametrize(
    "base,n",
    [
        (DlnParams(2.5, 1.2), 100000),
        (HookedParams(3.0, 20.0), 100000),
        pytest.param(DlnParams(2.5, 1.2), 1000000, marks=pytest.mark.slow),
        pytest.param(HookedParams(3.0, 20.0), 1000000, marks=pytest.mark.slow),
    ],
)
def test_draws_follow_the_base_family(base, n):
    model = ZeroInflatedModel(base)
    data = sample(SyntheticSpec(model, n=n, seed=31))
    assert ks_statistic(data, model) < _dkw(n)


def test_journal_structure(dln):
    structure = JournalStructure(
        n_journals=12, n_magazines=2, magazine_articles=50, magazine_q=1.0
    )
    spec = SyntheticSpec(ZeroInflatedModel(dln), n=3000, seed=8, journals=structure)
    data = sample(spec)
    assert data.n_total == 3100
    assert len(data.labels) == 3100
    assert data.labels[-1] == "magazine-2"
    assert set(data.labels[:3000]) <= {f"journal-{i:02d}" for i in range(1, 13)}
    assert np.all(data.counts[3000:] == 1)

    again = sample(spec)
    assert again.labels == data.labels


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_journals": 0},
        {"n_magazines": -1},
        {"magazine_articles": 0},
        {"magazine_q": 0.5},
    ],
)
def test_journal_structure_errors(kwargs):
    with pytest.raises(DomainError):
        JournalStructure(**kwargs)


def test_spec_errors(dln):
    with pytest.raises(DomainError):
        SyntheticSpec(ZeroInflatedModel(dln), n=0)
    with pytest.raises(DomainError):
        SyntheticSpec(ZeroInflatedModel(dln), n=10, seed=-1)
    with pytest.raises(DomainError):
        SyntheticSpec(ZeroInflatedModel(dln), n=10, seed=2**64)
