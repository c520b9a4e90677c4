# -*- coding: utf-8 -*-

"""Log-likelihood, AIC and the Kolmogorov-Smirnov statistic, and the
four-model comparison built from them."""

from dataclasses import dataclass, field
import logging

import numpy as np

from .errors import DomainError
from .zero_inflation import ModelKind, zi_cdf, zi_logpmf

logger = logging.getLogger(__name__)

# Log-likelihoods closer than this are treated as equal.
TIE_TOLERANCE = 1.0e-9

# The extra parameter of a zero-inflated model costs 1 in log-likelihood.
IMPROVEMENT_MARGIN = 1.0


def _check(data):
    if data.n_total == 0:
        raise DomainError("The dataset is empty.")


def log_likelihood(data, model):
    """The sum of ln f(x_i, p) over the dataset.

    Parameters
    ----------
    data : CountDataset
        Shifted counts.
    model : ZeroInflatedModel
        Use p = 0 for the base families.

    Returns
    -------
    float
    """
    _check(data)
    values, counts = data.value_counts
    return float(np.dot(counts, zi_logpmf(values, model)))


def aic(loglik, n_params):
    """The Akaike information criterion, 2 n_params - 2 loglik."""
    if n_params < 1:
        raise DomainError(f"A model has at least one parameter, not {n_params}.")
    return 2.0 * n_params - 2.0 * loglik


def empirical_cdf(data):
    """The support 1..max(data) and the empirical CDF on it."""
    _check(data)
    frequencies = np.bincount(data.counts)[1:]
    support = np.arange(1, frequencies.size + 1)
    return support, np.cumsum(frequencies) / data.n_total


def ks_statistic(data, model):
    """The largest gap between the empirical and the model CDF.

    Every integer from 1 to max(data) is checked, which is exact for a pair of
    discrete CDFs on the integers.

    Returns
    -------
    float
        A value in [0, 1].
    """
    support, empirical = empirical_cdf(data)
    fitted = zi_cdf(support, model)
    return float(np.max(np.abs(empirical - fitted)))


def is_improvement(inflated_loglik, base_loglik):
    """Whether a zero-inflated fit beats its base model under AIC."""
    return inflated_loglik - base_loglik > IMPROVEMENT_MARGIN


@dataclass(frozen=True)
class ModelComparison:
    """The four fits of one dataset and the model AIC selects.

    Attributes
    ----------
    results : dict
        FitResult for each ModelKind that could be fitted.
    winner : ModelKind
        The model with the lowest AIC.
    improvements : dict
        For ZIDL and ZIHP, whether they beat their base model by more than 1
        in log-likelihood.
    errors : dict
        Error messages for models whose fit failed.
    tie_note : str
        Set when the winner was chosen by the declared model order.
    """

    results: dict
    winner: ModelKind
    improvements: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)
    tie_note: str = None

    def best_excluding_unimproved(self):
        """The best model when zero inflation counts only if it improves.

        Each family is represented by its zero-inflated fit when that is an
        improvement and by its base fit otherwise; the representative with the
        highest log-likelihood wins.
        """
        candidates = []
        for kind in (ModelKind.DLN, ModelKind.HOOKED):
            inflated = ModelKind.of(kind.family, inflated=True)
            if self.improvements.get(inflated, False):
                candidates.append(inflated)
            elif kind in self.results:
                candidates.append(kind)
        if len(candidates) == 0:
            return None
        return max(candidates, key=lambda kind: self.results[kind].loglik)


def compare(results, errors=None):
    """Pick the AIC winner of a set of fits.

    Parameters
    ----------
    results : dict
        FitResult keyed by ModelKind.
    errors : dict, optional
        Messages for models that could not be fitted.

    Returns
    -------
    ModelComparison
    """
    errors = {} if errors is None else dict(errors)
    if len(results) == 0:
        reasons = "; ".join(f"{kind.value}: {text}" for kind, text in errors.items())
        raise DomainError(f"None of the models could be fitted: {reasons}")

    ordered = [kind for kind in ModelKind if kind in results]
    best = min(results[kind].aic for kind in ordered)
    tied = [k for k in ordered if results[k].aic - best <= 2.0 * TIE_TOLERANCE]
    winner = tied[0]
    tie_note = None
    if len(tied) > 1:
        tie_note = (
            "AIC tie between " + ", ".join(kind.value for kind in tied)
            + f"; {winner.value} chosen by model order."
        )
        logger.info(tie_note)

    improvements = {}
    for kind in (ModelKind.ZIDL, ModelKind.ZIHP):
        if kind in results and kind.base_kind in results:
            improvements[kind] = is_improvement(
                results[kind].loglik, results[kind.base_kind].loglik
            )

    return ModelComparison(
        results=dict(results),
        winner=winner,
        improvements=improvements,
        errors=errors,
        tie_note=tie_note,
    )
