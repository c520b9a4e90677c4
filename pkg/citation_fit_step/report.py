# -*- coding: utf-8 -*-

"""Tables, JSON and CSV views of fits, comparisons and curves.

Nothing here computes a fit. Every number in a table can be recovered from the
JSON written for the same result.
"""

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from fractions import Fraction
import json
import logging

import numpy as np
import pandas as pd
from tabulate import tabulate

from seamm_util import CompactJSONEncoder

from .distributions import DlnParams, Family, HookedParams
from .errors import UsageError
from .evaluation import empirical_cdf
from .zero_inflation import ModelKind, ZeroInflatedModel, zi_cdf

logger = logging.getLogger(__name__)


def percent(numerator, denominator):
    """An integer percentage, rounding halves away from zero."""
    if denominator == 0:
        return 0
    value = Decimal(100 * numerator) / Decimal(denominator)
    return int(value.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def _param_dict(params):
    result = dict(zip(params.names, params.as_tuple()))
    if params.family is Family.HOOKED:
        result["B_unshifted"] = params.b_unshifted
    return result


@dataclass(frozen=True)
class ReportRow:
    """One row of a fit table.

    ``uncitable_pct`` is k as a percentage of all articles and
    ``uncitable_of_uncited_pct`` is k as a percentage of the uncited ones.
    ``uncited`` is the number of uncited articles left for the base family,
    r - k.
    """

    label: str
    model: str
    articles: int
    uncitable_pct: int
    uncitable_of_uncited_pct: int
    uncited: int
    params: dict
    ks: float
    loglik: float
    aic: float
    converged: bool

    @classmethod
    def from_fit(cls, fit, label=""):
        k = fit.model.k
        return cls(
            label=label,
            model=fit.kind.value,
            articles=fit.n_total,
            uncitable_pct=percent(k, fit.n_total),
            uncitable_of_uncited_pct=percent(k, fit.r),
            uncited=fit.r - k,
            params=_param_dict(fit.params),
            ks=fit.ks,
            loglik=fit.loglik,
            aic=fit.aic,
            converged=fit.converged,
        )

    def formatted(self):
        """The row as display strings, keyed by column heading."""
        row = {
            "Subject": self.label,
            "Model": self.model,
            "Articles": str(self.articles),
            "Uncitable": f"{self.uncitable_pct}%",
            "of uncited": f"{self.uncitable_of_uncited_pct}%",
            "Uncited": str(self.uncited),
        }
        for name, value in self.params.items():
            heading = "B (unshifted)" if name == "B_unshifted" else name
            row[heading] = f"{value:.4g}"
        row["K-S"] = f"{self.ks:.3f}"
        row["Log-lik"] = f"{self.loglik:.1f}"
        if not self.converged:
            row["Log-lik"] += " *"
        return row


def _render(rows, colalign=None):
    table = {}
    for row in rows:
        for key in row:
            table.setdefault(key, [])
    for row in rows:
        for key in table:
            table[key].append(row.get(key, ""))
    return tabulate(
        table,
        headers="keys",
        tablefmt="rounded_outline",
        colalign=colalign,
        disable_numparse=True,
    )


def fit_table(fits, label=""):
    """The fits of one family, base row first, as a text table.

    A ``*`` after the log-likelihood marks a fit that did not converge.
    """
    rows = [ReportRow.from_fit(fit, label=label).formatted() for fit in fits]
    return _render(rows)


def comparison_table(comparison):
    """All four models with their AIC, the winner marked."""
    rows = []
    for kind in ModelKind:
        if kind not in comparison.results:
            if kind in comparison.errors:
                rows.append({"Model": kind.value, "Parameters": "failed"})
            continue
        fit = comparison.results[kind]
        parameters = ", ".join(
            f"{name}={value:.4g}" for name, value in _param_dict(fit.params).items()
        )
        improvement = ""
        if kind in comparison.improvements:
            improvement = "yes" if comparison.improvements[kind] else "no"
        rows.append(
            {
                "Model": kind.value + (" <" if kind is comparison.winner else ""),
                "Parameters": parameters,
                "p": f"{fit.model.p_float:.4f}",
                "k": str(fit.model.k),
                "Log-lik": f"{fit.loglik:.1f}",
                "AIC": f"{fit.aic:.1f}",
                "K-S": f"{fit.ks:.3f}",
                "Improvement": improvement,
                "Converged": "yes" if fit.converged else "no",
            }
        )
    return _render(rows)


def summary_table(summary, label=""):
    """The dataset columns: articles, uncited, and max/mean/median citations."""
    row = {
        "Subject": label,
        "Articles": str(summary.n_total),
        "Uncited": str(summary.uncited),
        "Max": str(summary.max),
        "Mean": f"{summary.mean:.2f}",
        "Median": f"{summary.median:.1f}",
    }
    return _render([row])


def dumps_json(data):
    """Deterministic JSON text."""
    return json.dumps(data, indent=4, cls=CompactJSONEncoder, sort_keys=True) + "\n"


def model_to_dict(kind, model):
    kind = ModelKind(kind)
    return {
        "model": kind.value,
        "params": _param_dict(model.base),
        "p": float(model.p),
        "k": model.k,
        "shifted": True,
    }


def fit_to_dict(fit):
    """The JSON form of a FitResult."""
    result = model_to_dict(fit.kind, fit.model)
    result.update(
        {
            "n_total": fit.n_total,
            "r": fit.r,
            "loglik": fit.loglik,
            "aic": fit.aic,
            "ks": fit.ks,
            "converged": fit.converged,
            "evaluations": fit.evaluations,
            "n_params": fit.n_params,
            "diagnostics": list(fit.diagnostics),
        }
    )
    return result


def fit_to_json(fit):
    return dumps_json(fit_to_dict(fit))


def model_from_dict(data):
    """The model kind and parameters stored by :func:`model_to_dict`.

    Parameters
    ----------
    data : dict
        A fit result or a simulation sidecar.

    Returns
    -------
    (ModelKind, ZeroInflatedModel)
    """
    if data.get("shifted") is not True:
        raise UsageError(
            "The model file was not written for shifted counts and cannot be "
            "compared with shifted data."
        )
    try:
        kind = ModelKind(data["model"])
        params = data["params"]
        params_class = HookedParams if kind.family is Family.HOOKED else DlnParams
        base = params_class(*[params[name] for name in params_class.names])
        k = int(data.get("k", 0))
        n_total = data.get("n_total")
        if k > 0 and n_total:
            p = Fraction(k, int(n_total))
        else:
            p = Fraction(data.get("p", 0.0)).limit_denominator(10**12)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"The model file is not usable: {e}")
    return kind, ZeroInflatedModel(base=base, p=p, k=k)


def model_from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"The model file is not valid JSON: {e}")
    return model_from_dict(data)


def comparison_to_dict(comparison):
    """The JSON form of a ModelComparison."""
    best = comparison.best_excluding_unimproved()
    return {
        "winner": comparison.winner.value,
        "models": {
            kind.value: fit_to_dict(fit) for kind, fit in comparison.results.items()
        },
        "improvements": {
            kind.value: flag for kind, flag in comparison.improvements.items()
        },
        "best_excluding_unimproved": None if best is None else best.value,
        "errors": {kind.value: text for kind, text in comparison.errors.items()},
        "tie_note": comparison.tie_note,
    }


def comparison_to_json(comparison):
    return dumps_json(comparison_to_dict(comparison))


@dataclass(frozen=True)
class CdfCurve:
    """Empirical and fitted CDF of a dataset over n = 1..max(data)."""

    support: np.ndarray
    empirical: np.ndarray
    fitted: np.ndarray
    kind: ModelKind
    model: ZeroInflatedModel

    @property
    def max_difference(self):
        return float(np.max(np.abs(self.empirical - self.fitted)))

    def to_frame(self):
        return pd.DataFrame(
            {
                "n": self.support,
                "empirical_cdf": self.empirical,
                "fitted_cdf": self.fitted,
            }
        )


def cdf_curve(data, kind, model):
    """The CDF comparison of a model with a dataset, ready for plotting."""
    support, empirical = empirical_cdf(data)
    fitted = np.asarray(zi_cdf(support, model), dtype=float)
    return CdfCurve(
        support=support,
        empirical=empirical,
        fitted=fitted,
        kind=ModelKind(kind),
        model=model,
    )


def frame_to_csv(df):
    return df.to_csv(index=False, lineterminator="\n")


def curve_to_csv(curve):
    return frame_to_csv(curve.to_frame())


def profile_frame(fit):
    """The k-scan of a zero-inflated fit: k, p, log-likelihood and parameters."""
    if len(fit.profile) == 0:
        raise UsageError(f"The {fit.kind.value} fit has no likelihood profile.")
    names = fit.profile[0].params.names
    columns = {
        "k": [point.k for point in fit.profile],
        "p": [float(point.p) for point in fit.profile],
        "loglik": [point.loglik for point in fit.profile],
    }
    for i, name in enumerate(names):
        columns[name] = [point.params.as_tuple()[i] for point in fit.profile]
    columns["converged"] = [point.converged for point in fit.profile]
    return pd.DataFrame(columns)


def journal_frame(profiles):
    return pd.DataFrame(
        {
            "journal": [j.journal for j in profiles],
            "articles": [j.articles for j in profiles],
            "uncited": [j.uncited for j in profiles],
            "cited_fraction": [j.cited_fraction for j in profiles],
        }
    )
