# -*- coding: utf-8 -*-

"""The two base families, defined on shifted counts n = 1, 2, 3, ...

Citation counts have 1 added before they reach this module, so every
distribution here has its support starting at 1:

* the hooked (shifted) power law, f(n) = A (B + n)^-alpha, with
  A = 1 / zeta(alpha, B + 1) where zeta is the Hurwitz zeta function, and
* the discretised lognormal, which integrates a lognormal density over
  [n - 0.5, n + 0.5] and renormalises for the missing interval (0, 0.5].

B is stored in the shifted convention. For data that have not been shifted the
equivalent value is B + 1, see :attr:`HookedParams.b_unshifted`.

Everything is evaluated in log space where underflow is possible; the public
functions returning probabilities exponentiate at the end. All functions accept
scalars or numpy arrays for ``n``.
"""

from dataclasses import dataclass
import enum
import logging
import math

import numpy as np
from scipy import special

from .errors import DomainError

logger = logging.getLogger(__name__)

LOG_HALF = math.log(0.5)

# Bernoulli numbers B2, B4, B6, B8 for the Euler-Maclaurin tail.
_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0)


class Family(str, enum.Enum):
    """The base families."""

    DLN = "dln"
    HOOKED = "hooked"

    @property
    def description(self):
        if self is Family.DLN:
            return "discretised lognormal"
        return "hooked power law"


# The box the optimizer searches, in the order of the parameter tuples.
BOUNDS = {
    Family.DLN: ((-20.0, 20.0), (1.0e-4, 20.0)),
    Family.HOOKED: ((1.0001, 50.0), (1.0e-6, 1.0e6)),
}


@dataclass(frozen=True)
class HookedParams:
    """Parameters of the hooked power law on the shifted support.

    Attributes
    ----------
    alpha : float
        The exponent, > 1.
    b : float
        The shift B in the shifted-support convention, > 0.
    """

    alpha: float
    b: float

    family = Family.HOOKED
    names = ("alpha", "B")

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "b", float(self.b))
        if not (math.isfinite(self.alpha) and self.alpha > 1.0):
            raise DomainError(
                f"The hooked power law needs alpha > 1, not {self.alpha}."
            )
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise DomainError(f"The hooked power law needs B > 0, not {self.b}.")

    @property
    def b_unshifted(self):
        """B for data without the +1 shift."""
        return self.b + 1.0

    def as_tuple(self):
        return (self.alpha, self.b)


@dataclass(frozen=True)
class DlnParams:
    """Parameters of the discretised lognormal.

    Attributes
    ----------
    mu : float
        Location, in log units of the shifted counts.
    sigma : float
        Scale, in log units, > 0.
    """

    mu: float
    sigma: float

    family = Family.DLN
    names = ("mu", "sigma")

    def __post_init__(self):
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "sigma", float(self.sigma))
        if not math.isfinite(self.mu):
            raise DomainError(f"The lognormal mu must be finite, not {self.mu}.")
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError(
                f"The lognormal needs sigma > 0, not {self.sigma}."
            )

    def as_tuple(self):
        return (self.mu, self.sigma)


def make_params(family, values):
    """Create the parameter object for a family from a pair of values."""
    family = Family(family)
    if family is Family.HOOKED:
        return HookedParams(*values)
    return DlnParams(*values)


def _unwrap(x):
    """Turn 0-d arrays back into numpy scalars."""
    if isinstance(x, np.ndarray) and x.ndim == 0:
        return x[()]
    return x


def _support(n):
    """Validate n as positive integers and return it as a float array."""
    values = np.asarray(n, dtype=float)
    if values.size > 0:
        if not np.all(np.isfinite(values)) or np.any(values != np.floor(values)):
            raise DomainError(f"Counts must be integers, got {n!r}.")
        if np.any(values < 1):
            raise DomainError(
                "The shifted support starts at 1; add 1 to raw counts first."
            )
    return values


# ---------------------------------------------------------------------------
# Hooked power law
# ---------------------------------------------------------------------------


def log_hooked_norm(params):
    """The logarithm of the hooked normalising constant A."""
    if params.alpha <= 1.0:
        raise DomainError(f"The normalising sum diverges for alpha={params.alpha}.")
    total = special.zeta(params.alpha, params.b + 1.0)
    if not (np.isfinite(total) and total > 0.0):
        raise DomainError(
            f"Cannot normalise the hooked power law at alpha={params.alpha}, "
            f"B={params.b}."
        )
    return -math.log(total)


def hooked_norm(params):
    """The normalising constant A = 1 / zeta(alpha, B + 1).

    Parameters
    ----------
    params : HookedParams

    Returns
    -------
    float
    """
    return math.exp(log_hooked_norm(params))


def hooked_norm_direct(params, terms=None):
    """A evaluated by direct summation plus an Euler-Maclaurin tail.

    This is independent of the zeta function in scipy and is used to check it.
    The first ``terms`` - 1 terms are summed explicitly and the remainder from
    n = ``terms`` onwards is the integral, the half end term and the Bernoulli
    corrections up to B8.

    Parameters
    ----------
    params : HookedParams
    terms : int, optional
        Where the tail starts. The default grows with alpha, which keeps the
        neglected B10 term below about 1e-13 relative.

    Returns
    -------
    float
    """
    alpha = params.alpha
    if alpha <= 1.0:
        raise DomainError(f"The normalising sum diverges for alpha={alpha}.")
    if terms is None:
        terms = max(50, 4 * math.ceil(alpha))

    n = np.arange(1, terms, dtype=float)
    head = np.sum(np.exp(-alpha * np.log(params.b + n)))

    y = params.b + terms
    tail = y ** (1.0 - alpha) / (alpha - 1.0) + 0.5 * y**-alpha
    rising = alpha
    factorial = 2.0
    for j, bernoulli in enumerate(_BERNOULLI, start=1):
        order = 2 * j
        tail += bernoulli / factorial * rising * y ** (-alpha - order + 1)
        rising *= (alpha + order - 1) * (alpha + order)
        factorial *= (order + 1) * (order + 2)

    return 1.0 / (head + tail)


def hooked_logpmf(n, params):
    """The natural log of the hooked power-law pmf."""
    n = _support(n)
    return _unwrap(-params.alpha * np.log(params.b + n) + log_hooked_norm(params))


def hooked_pmf(n, params):
    """The hooked power-law pmf, A (B + n)^-alpha, for n >= 1."""
    return np.exp(hooked_logpmf(n, params))


def hooked_sf(n, params):
    """P(X > n) = zeta(alpha, B + n + 1) / zeta(alpha, B + 1)."""
    n = _support(n)
    tail = special.zeta(params.alpha, params.b + n + 1.0)
    return _unwrap(tail * math.exp(log_hooked_norm(params)))


def hooked_cdf(n, params):
    """P(X <= n) for the hooked power law."""
    return 1.0 - hooked_sf(n, params)


# ---------------------------------------------------------------------------
# Discretised lognormal
# ---------------------------------------------------------------------------


def normal_cdf(z):
    """The standard normal cumulative distribution function."""
    return special.ndtr(z)


def _standardize(x, params):
    return (np.log(x) - params.mu) / params.sigma


def _log_interval_mass(lower, upper):
    """log(Phi(upper) - Phi(lower)) for lower < upper.

    Intervals above the median are evaluated with the upper tail so that
    neither difference cancels catastrophically.
    """
    upper_tail = lower > 0.0
    a = np.where(upper_tail, special.log_ndtr(-lower), special.log_ndtr(upper))
    b = np.where(upper_tail, special.log_ndtr(-upper), special.log_ndtr(lower))
    with np.errstate(divide="ignore"):
        return a + np.log1p(-np.exp(b - a))


def log_dln_norm(params):
    """The logarithm of A = 1 - Phi((ln 0.5 - mu) / sigma)."""
    if not params.sigma > 0.0:
        raise DomainError(f"The lognormal needs sigma > 0, not {params.sigma}.")
    return float(special.log_ndtr(-(LOG_HALF - params.mu) / params.sigma))


def dln_norm(params):
    """The lognormal mass above 0.5, which renormalises the discretisation.

    Parameters
    ----------
    params : DlnParams

    Returns
    -------
    float
        A in (0, 1].
    """
    return math.exp(log_dln_norm(params))


def dln_logpmf(n, params):
    """The natural log of the discretised lognormal pmf."""
    n = _support(n)
    lower = _standardize(n - 0.5, params)
    upper = _standardize(n + 0.5, params)
    return _unwrap(_log_interval_mass(lower, upper) - log_dln_norm(params))


def dln_pmf(n, params):
    """The discretised lognormal pmf for n >= 1.

    [Phi((ln(n + 0.5) - mu) / sigma) - Phi((ln(n - 0.5) - mu) / sigma)] / A
    """
    return np.exp(dln_logpmf(n, params))


def dln_sf(n, params):
    """P(X > n) = [1 - Phi((ln(n + 0.5) - mu) / sigma)] / A."""
    n = _support(n)
    upper = _standardize(n + 0.5, params)
    return _unwrap(np.exp(special.log_ndtr(-upper) - log_dln_norm(params)))


def dln_cdf(n, params):
    """P(X <= n) for the discretised lognormal, in closed form."""
    return 1.0 - dln_sf(n, params)


# ---------------------------------------------------------------------------
# Family dispatch
# ---------------------------------------------------------------------------

_FUNCTIONS = {
    Family.HOOKED: (hooked_logpmf, hooked_sf),
    Family.DLN: (dln_logpmf, dln_sf),
}


def logpmf(n, params):
    """The log pmf of whichever family ``params`` belongs to."""
    return _FUNCTIONS[params.family][0](n, params)


def pmf(n, params):
    return np.exp(logpmf(n, params))


def sf(n, params):
    """The survival function P(X > n) of the family of ``params``."""
    return _FUNCTIONS[params.family][1](n, params)


def cdf(n, params):
    return 1.0 - sf(n, params)


def tail_bound(n, params):
    """An explicit bound on 1 - sum_{m <= n} pmf(m), decreasing in n.

    For the hooked power law this is the integral bound
    A (B + n)^(1 - alpha) / (alpha - 1); for the discretised lognormal the
    tail is known exactly in closed form.
    """
    if params.family is Family.HOOKED:
        n = _support(n)
        log_bound = (
            log_hooked_norm(params)
            + (1.0 - params.alpha) * np.log(params.b + n)
            - math.log(params.alpha - 1.0)
        )
        return _unwrap(np.exp(log_bound))
    return dln_sf(n, params)
