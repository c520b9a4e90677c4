#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the tables, JSON and CDF curves."""

import io
import json
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from citation_fit_step import (
    HookedParams,
    ModelKind,
    UsageError,
    ZeroInflatedModel,
    fit_base,
    fit_zero_inflated,
    ks_statistic,
    summarize,
)
from citation_fit_step import report


@pytest.fixture(scope="module")
def zihp_fit(tiny_zidl_sample):
    return fit_zero_inflated(tiny_zidl_sample, "hooked")


@pytest.mark.parametrize(
    "numerator,denominator,expected",
    [(5, 1000, 1), (15, 1000, 2), (25, 1000, 3), (1, 3, 33), (2, 3, 67), (7, 0, 0)],
)
def test_percent_rounds_halves_up(numerator, denominator, expected):
    assert report.percent(numerator, denominator) == expected


def test_report_row(zihp_fit):
    row = report.ReportRow.from_fit(zihp_fit, label="Pharmacology")
    k = zihp_fit.model.k
    assert row.model == "ZIHP"
    assert row.articles == zihp_fit.n_total
    assert row.uncited == zihp_fit.r - k
    assert row.uncitable_pct == report.percent(k, zihp_fit.n_total)
    assert set(row.params) == {"alpha", "B", "B_unshifted"}
    assert row.params["B_unshifted"] == row.params["B"] + 1.0

    formatted = row.formatted()
    assert formatted["Subject"] == "Pharmacology"
    assert formatted["Uncitable"].endswith("%")
    assert "B (unshifted)" in formatted


def test_unconverged_rows_are_marked(small_data):
    fit = fit_base(small_data.subset([False, False, True]), "dln")
    assert not fit.converged
    assert report.ReportRow.from_fit(fit).formatted()["Log-lik"].endswith(" *")


def test_fit_table(tiny_zidl_sample, zihp_fit):
    base = fit_base(tiny_zidl_sample, "hooked")
    table = report.fit_table([base, zihp_fit], label="Test")
    assert table.startswith("╭")
    assert "Hooked" in table
    assert "ZIHP" in table
    assert "K-S" in table


def test_summary_table(small_data):
    table = report.summary_table(summarize(small_data), label="Tiny")
    assert "Tiny" in table
    assert "Median" in table


def test_fit_json(zihp_fit):
    data = json.loads(report.fit_to_json(zihp_fit))
    for key in ("model", "params", "p", "k", "loglik", "aic", "ks", "converged"):
        assert key in data
    assert data["shifted"] is True
    assert data["model"] == "ZIHP"
    assert data["n_params"] == 3
    assert report.fit_to_json(zihp_fit).endswith("}\n")


def test_model_from_dict_is_exact(zihp_fit):
    kind, model = report.model_from_dict(report.fit_to_dict(zihp_fit))
    assert kind is ModelKind.ZIHP
    assert model == zihp_fit.model


def test_model_from_dict_without_k():
    data = {
        "model": "Hooked",
        "params": {"alpha": 2.5, "B": 3.0},
        "p": 0.25,
        "shifted": True,
    }
    kind, model = report.model_from_dict(data)
    assert kind is ModelKind.HOOKED
    assert model.base == HookedParams(2.5, 3.0)
    assert model.p == Fraction(1, 4)


@pytest.mark.parametrize(
    "data",
    [
        {"model": "DLN", "params": {"mu": 0.0, "sigma": 1.0}, "shifted": False},
        {"model": "DLN", "params": {"mu": 0.0, "sigma": 1.0}},
        {"model": "Other", "params": {}, "shifted": True},
        {"model": "DLN", "params": {"mu": 0.0}, "shifted": True},
        {"model": "DLN", "params": {"mu": 0.0, "sigma": -1.0}, "shifted": True},
    ],
)
def test_unusable_model_files(data):
    with pytest.raises(UsageError):
        report.model_from_dict(data)


def test_model_from_bad_json():
    with pytest.raises(UsageError):
        report.model_from_json("{not json")


def test_cdf_curve(tiny_zidl_sample, zihp_fit):
    curve = report.cdf_curve(tiny_zidl_sample, zihp_fit.kind, zihp_fit.model)
    assert curve.empirical[-1] == 1.0
    assert curve.support[0] == 1
    assert np.all(np.diff(curve.fitted) >= 0.0)
    assert curve.max_difference == ks_statistic(tiny_zidl_sample, zihp_fit.model)
    assert curve.max_difference == zihp_fit.ks

    df = pd.read_csv(io.StringIO(report.curve_to_csv(curve)))
    assert list(df.columns) == ["n", "empirical_cdf", "fitted_cdf"]
    difference = np.max(np.abs(df["empirical_cdf"] - df["fitted_cdf"]))
    assert difference == pytest.approx(zihp_fit.ks, abs=1e-12)


def test_profile_frame(tiny_zidl_sample, zihp_fit):
    df = report.profile_frame(zihp_fit)
    assert list(df.columns) == ["k", "p", "loglik", "alpha", "B", "converged"]
    assert list(df["k"]) == list(range(tiny_zidl_sample.ones + 1))
    assert df["loglik"].max() == pytest.approx(zihp_fit.loglik, abs=1e-9)

    base = fit_base(tiny_zidl_sample, "dln")
    with pytest.raises(UsageError):
        report.profile_frame(base)


def test_model_to_dict_base():
    model = ZeroInflatedModel(HookedParams(2.0, 4.0))
    data = report.model_to_dict(ModelKind.HOOKED, model)
    assert data == {
        "model": "Hooked",
        "params": {"alpha": 2.0, "B": 4.0, "B_unshifted": 5.0},
        "p": 0.0,
        "k": 0,
        "shifted": True,
    }
