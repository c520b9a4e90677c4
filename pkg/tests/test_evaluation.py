#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for log-likelihoods, AIC, K-S and model selection."""

from fractions import Fraction

import numpy as np
import pytest

from citation_fit_step import (
    CountDataset,
    DlnParams,
    DomainError,
    Family,
    FitResult,
    HookedParams,
    ModelKind,
    ZeroInflatedModel,
    aic,
    ks_statistic,
)
from citation_fit_step import distributions as d
from citation_fit_step import evaluation


def _result(kind, loglik):
    if kind.family is Family.DLN:
        base = DlnParams(1.0, 1.0)
    else:
        base = HookedParams(2.0, 3.0)
    p = Fraction(1, 10) if kind.inflated else Fraction(0)
    return FitResult(
        kind=kind,
        model=ZeroInflatedModel(base=base, p=p, k=10 if kind.inflated else 0),
        loglik=loglik,
        n_params=kind.n_params,
        aic=aic(loglik, kind.n_params),
        ks=0.01,
        converged=True,
        evaluations=100,
        n_total=100,
        r=30,
    )


def test_aic():
    assert aic(-100.0, 2) == 204.0
    assert aic(-100.0, 3) == 206.0
    with pytest.raises(DomainError):
        aic(-1.0, 0)


def test_log_likelihood_by_hand():
    data = CountDataset(counts=[1, 1, 2, 7])
    model = ZeroInflatedModel(base=HookedParams(2.5, 1.5), p=Fraction(1, 4))
    expected = sum(
        np.log(0.25 + 0.75 * d.pmf(1, model.base)) if x == 1
        else np.log(0.75 * d.pmf(x, model.base))
        for x in data.counts
    )
    assert evaluation.log_likelihood(data, model) == pytest.approx(expected, rel=1e-12)


def test_log_likelihood_empty():
    with pytest.raises(DomainError):
        evaluation.log_likelihood(
            CountDataset(counts=[]), ZeroInflatedModel(DlnParams(0.0, 1.0))
        )


def test_ks_all_ones():
    base = DlnParams(0.0, 1.0)
    data = CountDataset(counts=[1, 1, 1, 1])
    assert ks_statistic(data, ZeroInflatedModel(base)) == pytest.approx(
        1.0 - d.cdf(1, base), abs=1e-15
    )


def test_empirical_cdf():
    support, ecdf = evaluation.empirical_cdf(CountDataset(counts=[1, 3, 3, 4]))
    np.testing.assert_array_equal(support, [1, 2, 3, 4])
    np.testing.assert_array_equal(ecdf, [0.25, 0.25, 0.75, 1.0])


def test_ks_against_brute_force():
    rng = np.random.default_rng(5)
    for i in range(100):
        counts = rng.integers(1, 30, size=20)
        data = CountDataset(counts=counts)
        if i % 2:
            base = DlnParams(rng.uniform(0.0, 3.0), rng.uniform(0.3, 1.5))
        else:
            base = HookedParams(rng.uniform(1.5, 4.0), rng.uniform(0.5, 20.0))
        model = ZeroInflatedModel(base, p=Fraction(int(rng.integers(0, 5)), 20))

        support = np.arange(1, counts.max() + 1)
        fitted = evaluation.zi_cdf(support, model)
        brute = 0.0
        for n, value in zip(support, fitted):
            below = sum(1 for x in counts if x <= n)
            brute = max(brute, abs(below / 20 - value))
        statistic = ks_statistic(data, model)
        assert statistic == brute
        assert 0.0 <= statistic <= 1.0
        shuffled = CountDataset(counts=rng.permutation(counts))
        assert ks_statistic(shuffled, model) == statistic


def test_improvement_margin():
    assert not evaluation.is_improvement(-99.0, -100.0)
    assert evaluation.is_improvement(-98.9, -100.0)
    assert not evaluation.is_improvement(-100.0, -100.0)


def test_compare_picks_lowest_aic():
    results = {
        ModelKind.DLN: _result(ModelKind.DLN, -120.0),
        ModelKind.ZIDL: _result(ModelKind.ZIDL, -110.0),
        ModelKind.HOOKED: _result(ModelKind.HOOKED, -115.0),
        ModelKind.ZIHP: _result(ModelKind.ZIHP, -114.5),
    }
    comparison = evaluation.compare(results)
    assert comparison.winner is ModelKind.ZIDL
    assert comparison.tie_note is None
    assert comparison.improvements == {ModelKind.ZIDL: True, ModelKind.ZIHP: False}
    # Hooked stands in for its family, since ZIHP is not an improvement
    assert comparison.best_excluding_unimproved() is ModelKind.ZIDL
    for kind, fit in comparison.results.items():
        assert fit.aic == 2 * fit.n_params - 2 * fit.loglik


def test_best_excluding_unimproved_differs():
    results = {
        ModelKind.DLN: _result(ModelKind.DLN, -100.0),
        ModelKind.ZIDL: _result(ModelKind.ZIDL, -99.5),
        ModelKind.HOOKED: _result(ModelKind.HOOKED, -100.2),
        ModelKind.ZIHP: _result(ModelKind.ZIHP, -98.0),
    }
    comparison = evaluation.compare(results)
    assert comparison.winner is ModelKind.ZIHP
    assert comparison.best_excluding_unimproved() is ModelKind.ZIHP

    results[ModelKind.ZIHP] = _result(ModelKind.ZIHP, -99.3)
    comparison = evaluation.compare(results)
    assert comparison.best_excluding_unimproved() is ModelKind.DLN


def test_compare_tie_goes_to_model_order():
    results = {
        ModelKind.HOOKED: _result(ModelKind.HOOKED, -50.0),
        ModelKind.DLN: _result(ModelKind.DLN, -50.0),
    }
    comparison = evaluation.compare(results)
    assert comparison.winner is ModelKind.DLN
    assert "DLN, Hooked" in comparison.tie_note


def test_compare_with_errors():
    results = {ModelKind.HOOKED: _result(ModelKind.HOOKED, -50.0)}
    comparison = evaluation.compare(results, {ModelKind.ZIHP: "failed"})
    assert comparison.winner is ModelKind.HOOKED
    assert comparison.errors == {ModelKind.ZIHP: "failed"}
    assert comparison.improvements == {}


def test_compare_nothing_fitted():
    with pytest.raises(DomainError, match="ZIDL: boom"):
        evaluation.compare({}, {ModelKind.ZIDL: "boom"})
