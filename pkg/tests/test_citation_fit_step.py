#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `citation_fit_step` package."""

import pytest  # noqa: F401
import citation_fit_step  # noqa: F401
from citation_fit_step.fit_parameters import FAMILIES, search_config


def test_construction():
    """Just create an object and test its type."""
    result = citation_fit_step.CitationFit()
    assert (
        str(type(result)) == "<class 'citation_fit_step.citation_fit.CitationFit'>"
    )


def test_fit_construction():
    result = citation_fit_step.Fit()
    assert str(type(result)) == "<class 'citation_fit_step.fit.Fit'>"
    assert result._calculation == "fit"


def test_compare_construction():
    result = citation_fit_step.Compare()
    assert str(type(result)) == "<class 'citation_fit_step.compare.Compare'>"
    assert isinstance(result, citation_fit_step.Fit)
    assert result._calculation == "compare"


def test_parameters():
    P = citation_fit_step.FitParameters().values_to_dict()
    assert P["family"] in FAMILIES
    assert "workers" in citation_fit_step.CompareParameters().parameters
    assert "family" not in citation_fit_step.CompareParameters().parameters
    assert "threshold" in citation_fit_step.CitationFitParameters().parameters


def test_search_config_from_parameters():
    P = {
        "stride": 5,
        "refine": True,
        "warm start": False,
        "max iterations": 300,
        "workers": 2,
    }
    config = search_config(P)
    assert config.stride == 5
    assert config.refine
    assert not config.warm_start
    assert config.max_iterations == 300
    assert config.workers == 2


def test_metadata():
    results = citation_fit_step.metadata["results"]
    for key in ("model", "aic", "ks", "p", "k", "winner", "aic_ZIHP"):
        assert key in results
    for value in results.values():
        assert set(value["calculation"]) <= {"fit", "compare"}
