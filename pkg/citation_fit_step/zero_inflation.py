# -*- coding: utf-8 -*-

"""Zero-inflated mixtures over either base family.

With probability p an observation is a predetermined 1 (an uncited article once
counts are shifted); otherwise it is drawn from the base family f:

    f(n, p) = (1 - p) f(n)            for n > 1
    f(1, p) = p + (1 - p) f(1)

During fitting p is always k / N for an integer number k of removed ones, and it
is kept as an exact fraction until it is reported.
"""

from dataclasses import dataclass
import enum
from fractions import Fraction
import logging
import math

import numpy as np

from . import distributions
from .errors import DomainError

logger = logging.getLogger(__name__)


class ModelKind(str, enum.Enum):
    """The four models, in their declared order (used to break ties)."""

    DLN = "DLN"
    ZIDL = "ZIDL"
    HOOKED = "Hooked"
    ZIHP = "ZIHP"

    @classmethod
    def of(cls, family, inflated):
        family = distributions.Family(family)
        if family is distributions.Family.DLN:
            return cls.ZIDL if inflated else cls.DLN
        return cls.ZIHP if inflated else cls.HOOKED

    @property
    def family(self):
        if self in (ModelKind.DLN, ModelKind.ZIDL):
            return distributions.Family.DLN
        return distributions.Family.HOOKED

    @property
    def inflated(self):
        return self in (ModelKind.ZIDL, ModelKind.ZIHP)

    @property
    def n_params(self):
        return 3 if self.inflated else 2

    @property
    def base_kind(self):
        """The non-inflated counterpart."""
        return ModelKind.of(self.family, inflated=False)


@dataclass(frozen=True)
class ZeroInflatedModel:
    """A base family plus an inflation proportion.

    Attributes
    ----------
    base : HookedParams or DlnParams
        The parameters of the base family.
    p : fractions.Fraction
        The probability of a predetermined 1, 0 <= p < 1.
    k : int
        The number of ones attributed to inflation when fitted, so that
        p = k / N for the fitting dataset of size N. Zero otherwise.
    """

    base: object
    p: Fraction = Fraction(0)
    k: int = 0

    def __post_init__(self):
        if not isinstance(self.p, Fraction):
            object.__setattr__(self, "p", Fraction(self.p))
        if not (0 <= self.p < 1):
            raise DomainError(f"The inflation proportion must be in [0, 1): {self.p}")
        if self.k < 0:
            raise DomainError(f"The number of inflated ones is negative: {self.k}")

    @classmethod
    def from_k(cls, base, k, n_total):
        """The model with p = k / n_total, as produced by the k-scan."""
        return cls(base=base, p=mle_p_for_k(k, n_total), k=k)

    @property
    def family(self):
        return self.base.family

    @property
    def p_float(self):
        return float(self.p)

    def with_base(self, base):
        return ZeroInflatedModel(base=base, p=self.p, k=self.k)


def mle_p_for_k(k, n_total):
    """The maximum-likelihood p when k ones are removed from N values.

    Parameters
    ----------
    k : int
        Number of ones removed, 0 <= k < n_total.
    n_total : int
        The size of the full dataset.

    Returns
    -------
    fractions.Fraction
        k / n_total, exactly.
    """
    if k < 0 or k >= n_total:
        raise DomainError(f"Need 0 <= k < N, got k={k}, N={n_total}.")
    return Fraction(k, n_total)


def zi_logpmf(n, model):
    """The natural log of the zero-inflated pmf."""
    base = np.asarray(distributions.logpmf(n, model.base), dtype=float)
    n = np.asarray(n)
    p = float(model.p)
    if p == 0.0:
        result = base
    else:
        log_p = math.log(p)
        log_q = math.log1p(-p)
        result = np.where(n == 1, np.logaddexp(log_p, log_q + base), log_q + base)
    return distributions._unwrap(result)


def zi_pmf(n, model):
    """(1 - p) f(n) for n > 1 and p + (1 - p) f(1) for n = 1."""
    return np.exp(zi_logpmf(n, model))


def zi_cdf(n, model):
    """p + (1 - p) F(n), where F is the base-family CDF."""
    p = float(model.p)
    return p + (1.0 - p) * distributions.cdf(n, model.base)


def zi_sf(n, model):
    """1 - zi_cdf(n), without cancellation in the tail."""
    return (1.0 - float(model.p)) * distributions.sf(n, model.base)


def zi_loglik_from_truncated(trunc_loglik, log_f1, k, r, n_total):
    """Convert a truncated-data log-likelihood to the zero-inflated one.

    The base family was fitted to the data with k of its r ones removed. With
    p = k / N the full-data zero-inflated log-likelihood is obtained by

    * removing the r - k ones of the truncated fit: - (r - k) ln f(1),
    * scaling the N - r values above 1 by 1 - p: + (N - r) ln(1 - p),
    * adding all r ones under the mixture: + r ln(p + (1 - p) f(1)).

    Parameters
    ----------
    trunc_loglik : float
        Base-family log-likelihood of the truncated dataset.
    log_f1 : float
        ln f(1) of the base family fitted to the truncated dataset.
    k, r, n_total : int
        Removed ones, ones in the full dataset, and its size.

    Returns
    -------
    float
        The log-likelihood of the full dataset under the mixture.
    """
    if not (0 <= k <= r <= n_total):
        raise DomainError(f"Need 0 <= k <= r <= N, got k={k}, r={r}, N={n_total}.")
    if k == n_total:
        raise DomainError("Cannot inflate every value: the truncated dataset is empty.")
    if not (-math.inf < log_f1 < 0.0):
        raise DomainError(f"f(1) must be in (0, 1), got exp({log_f1}).")

    if k == 0:
        return trunc_loglik

    p = k / n_total
    log_q = math.log1p(-p)
    log_one = np.logaddexp(math.log(p), log_q + log_f1)
    return float(
        trunc_loglik - (r - k) * log_f1 + (n_total - r) * log_q + r * log_one
    )
