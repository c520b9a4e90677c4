#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Fixtures for testing the 'citation_fit_step' package."""

import numpy as np
import pytest

from citation_fit_step import (
    CountDataset,
    DlnParams,
    HookedParams,
    SyntheticSpec,
    ZeroInflatedModel,
    sample,
)


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        # --runslow given in cli: do not skip slow tests
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture()
def dln():
    return DlnParams(mu=2.5, sigma=1.2)


@pytest.fixture()
def hooked():
    return HookedParams(alpha=3.0, b=20.0)


@pytest.fixture()
def small_data():
    """Raw counts 0, 0, 3 shifted to 1, 1, 4."""
    return CountDataset.from_raw([0, 0, 3])


@pytest.fixture(scope="session")
def zidl_sample():
    """2,000 draws from a zero-inflated lognormal with 15% uncitable."""
    model = ZeroInflatedModel(base=DlnParams(mu=2.5, sigma=1.2), p=0.15)
    return sample(SyntheticSpec(model=model, n=2000, seed=20240501))


@pytest.fixture(scope="session")
def tiny_zidl_sample():
    """100 draws from a zero-inflated lognormal, small enough to rescan."""
    model = ZeroInflatedModel(base=DlnParams(mu=1.5, sigma=1.0), p=0.2)
    return sample(SyntheticSpec(model=model, n=100, seed=7))


@pytest.fixture()
def journal_corpus():
    """A magazine with 110 of 117 articles uncited, a journal with 47 of 47
    cited, and a few unlabelled articles."""
    rng = np.random.default_rng(3)
    magazine = [0] * 110 + list(rng.integers(1, 4, size=7))
    journal = list(rng.integers(1, 40, size=47))
    unlabelled = [0, 0, 5]
    raw = magazine + journal + unlabelled
    labels = (
        ["Apotheker Weekly"] * 117 + ["Ethnobiology Letters"] * 47 + [""] * 3
    )
    return CountDataset.from_raw(raw, labels=labels)
