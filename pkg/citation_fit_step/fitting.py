# -*- coding: utf-8 -*-

"""Maximum-likelihood fitting of the base families and the zero-inflation scan.

The base families are fitted with a Nelder-Mead simplex over a bounded box.
Zero-inflated models are fitted by removing k of the r ones, fitting the base
family to what is left and converting that log-likelihood back to the full
dataset; every k on the scan grid is tried and the best kept.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
import logging
import math

import numpy as np
from scipy import optimize, special

from . import distributions
from .distributions import BOUNDS, Family, make_params
from .errors import DomainError
from .evaluation import TIE_TOLERANCE, aic, compare, ks_statistic
from .zero_inflation import ModelKind, ZeroInflatedModel, zi_loglik_from_truncated

logger = logging.getLogger(__name__)

# A fitted coordinate this close to either end of its box is reported.
_BOUNDARY_FRACTION = 1.0e-6


@dataclass(frozen=True)
class SearchConfig:
    """Controls for the optimizer and the k-scan.

    Attributes
    ----------
    stride : int
        Step between scanned k values; 1 scans every k.
    refine : bool
        After a strided scan, rescan every k within a stride of the best one.
    warm_start : bool
        Start each fit in the scan from the previous one. This makes the scan
        serial.
    simplex_size : float
        Edge of the initial simplex, in the optimizer's internal coordinates.
    fatol : float
        Convergence when the log-likelihoods on the simplex differ by less.
    xatol : float
        ... and the simplex vertices differ by less, in internal coordinates.
    max_iterations : int
        Iteration limit for each simplex run.
    workers : int
        Processes for cold-started scans and for the four fits of a comparison.
    """

    stride: int = 1
    refine: bool = False
    warm_start: bool = True
    simplex_size: float = 0.25
    fatol: float = 1.0e-8
    xatol: float = 1.0e-6
    max_iterations: int = 2000
    workers: int = 1

    def __post_init__(self):
        if self.stride < 1:
            raise DomainError(f"The k stride must be at least 1, not {self.stride}.")
        if self.max_iterations < 1:
            raise DomainError("The optimizer needs at least one iteration.")
        if self.workers < 1:
            raise DomainError("At least one worker is needed.")
        if not (self.fatol > 0 and self.xatol > 0 and self.simplex_size > 0):
            raise DomainError("Optimizer tolerances and simplex size must be > 0.")

    @property
    def exhaustive(self):
        return self.stride == 1

    @classmethod
    def from_section(cls, section, **overrides):
        """Build a configuration from a configparser section.

        Keys missing from the section keep their defaults, and keyword
        arguments that are not None override both.
        """
        values = {}
        for key, getter in (
            ("stride", section.getint),
            ("refine", section.getboolean),
            ("warm_start", section.getboolean),
            ("simplex_size", section.getfloat),
            ("fatol", section.getfloat),
            ("xatol", section.getfloat),
            ("max_iterations", section.getint),
            ("workers", section.getint),
        ):
            if key in section:
                try:
                    values[key] = getter(key)
                except ValueError as e:
                    raise DomainError(f"Bad configuration value for '{key}': {e}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class ProfilePoint:
    """The fit at one k of the zero-inflation scan."""

    k: int
    p: Fraction
    loglik: float
    params: object
    converged: bool


@dataclass(frozen=True)
class FitResult:
    """One model fitted to one dataset.

    Attributes
    ----------
    kind : ModelKind
        Which of the four models this is.
    model : ZeroInflatedModel
        The fitted parameters; p = 0 and k = 0 for the base models.
    loglik : float
        Natural-log likelihood of the full dataset.
    n_params : int
        2 for the base models, 3 for the zero-inflated ones.
    aic : float
        2 n_params - 2 loglik.
    ks : float
        Kolmogorov-Smirnov statistic against the full dataset.
    converged : bool
        False when the optimizer hit its limit or a degenerate optimum.
    evaluations : int
        Likelihood evaluations spent, over the whole scan.
    n_total, r : int
        Size and number of ones of the dataset.
    diagnostics : tuple of str
        Human-readable notes about the fit.
    profile : tuple of ProfilePoint
        The scan, ordered by k (zero-inflated fits only).
    """

    kind: ModelKind
    model: ZeroInflatedModel
    loglik: float
    n_params: int
    aic: float
    ks: float
    converged: bool
    evaluations: int
    n_total: int
    r: int
    diagnostics: tuple = ()
    profile: tuple = ()

    @property
    def params(self):
        return self.model.base

    @property
    def family(self):
        return self.kind.family


@dataclass(frozen=True)
class _BaseFit:
    params: object
    loglik: float
    evaluations: int
    converged: bool
    diagnostics: tuple


class _BoxTransform:
    """Maps the plane onto the optimizer box, one logistic per coordinate.

    Coordinates spanning decades (alpha - 1, B and sigma) are taken through a
    log first.
    """

    def __init__(self, family):
        (a_lo, a_hi), (b_lo, b_hi) = BOUNDS[family]
        if family is Family.HOOKED:
            # (offset, low, high, logarithmic)
            self.coordinates = (
                (1.0, math.log(a_lo - 1.0), math.log(a_hi - 1.0), True),
                (0.0, math.log(b_lo), math.log(b_hi), True),
            )
        else:
            self.coordinates = (
                (0.0, a_lo, a_hi, False),
                (0.0, math.log(b_lo), math.log(b_hi), True),
            )

    def to_internal(self, values):
        y = []
        for value, (offset, lo, hi, log) in zip(values, self.coordinates):
            w = math.log(max(value - offset, 1e-300)) if log else value
            fraction = min(max((w - lo) / (hi - lo), 1.0e-9), 1.0 - 1.0e-9)
            y.append(special.logit(fraction))
        return np.array(y)

    def fractions(self, y):
        return special.expit(np.asarray(y, dtype=float))

    def to_values(self, y):
        values = []
        for fraction, (offset, lo, hi, log) in zip(self.fractions(y), self.coordinates):
            w = lo + (hi - lo) * fraction
            values.append(offset + math.exp(w) if log else w)
        return tuple(values)

    def at_boundary(self, y):
        fractions = self.fractions(y)
        return bool(
            np.any(
                (fractions < _BOUNDARY_FRACTION) | (fractions > 1 - _BOUNDARY_FRACTION)
            )
        )


def _negative_loglik(y, family, transform, values, counts):
    try:
        params = make_params(family, transform.to_values(y))
        loglik = float(np.dot(counts, distributions.logpmf(values, params)))
    except DomainError:
        return math.inf
    if not math.isfinite(loglik):
        return math.inf
    return -loglik


def _loglik(values, counts, params):
    return float(np.dot(counts, distributions.logpmf(values, params)))


def initial_guess(values, counts, family):
    """A starting point for the simplex.

    The discretised lognormal starts from the mean and standard deviation of
    the log data. The hooked power law starts from the best point of an 8 x 8
    log-spaced grid over alpha and B.
    """
    values = np.asarray(values, dtype=float)
    counts = np.asarray(counts, dtype=float)
    if family is Family.DLN:
        logs = np.log(values)
        mu = float(np.average(logs, weights=counts))
        sd = float(np.sqrt(np.average((logs - mu) ** 2, weights=counts)))
        (mu_lo, mu_hi), (sigma_lo, sigma_hi) = BOUNDS[family]
        mu = min(max(mu, mu_lo), mu_hi)
        sigma = min(max(sd, 1.0e-2), sigma_hi)
        return (mu, sigma)

    best = None
    for alpha in 1.0 + np.geomspace(0.05, 20.0, 8):
        for b in np.geomspace(0.1, 1000.0, 8):
            loglik = _loglik(values, counts, distributions.HookedParams(alpha, b))
            if best is None or loglik > best[0]:
                best = (loglik, (float(alpha), float(b)))
    return best[1]


def _simplex(y, size):
    return np.vstack([y, y + [size, 0.0], y + [0.0, size]])


def _fit_values(values, counts, family, config, start=None):
    """Maximise the likelihood of a value/frequency table."""
    family = Family(family)
    transform = _BoxTransform(family)
    if start is None:
        start = initial_guess(values, counts, family)
    y0 = transform.to_internal(start)
    simplex = _simplex(y0, config.simplex_size)

    options = {
        "xatol": config.xatol,
        "fatol": config.fatol,
        "maxiter": config.max_iterations,
        "maxfev": 4 * config.max_iterations,
    }
    args = (family, transform, values, counts)
    first = optimize.minimize(
        _negative_loglik,
        y0,
        args=args,
        method="Nelder-Mead",
        options={**options, "initial_simplex": simplex},
    )
    # A fresh simplex at the optimum catches a collapsed first run.
    polish = _simplex(first.x, config.simplex_size)
    second = optimize.minimize(
        _negative_loglik,
        first.x,
        args=args,
        method="Nelder-Mead",
        options={**options, "initial_simplex": polish},
    )
    result = second if second.fun <= first.fun else first
    evaluations = int(first.nfev + second.nfev)

    diagnostics = []
    converged = bool(result.success)
    if not converged:
        diagnostics.append(f"The optimizer did not converge: {result.message}")
    if not math.isfinite(result.fun):
        raise DomainError("The likelihood could not be evaluated anywhere in the box.")
    if len(values) == 1:
        converged = False
        diagnostics.append(
            "All values are identical, so the maximum likelihood is degenerate."
        )
    elif transform.at_boundary(result.x):
        converged = False
        diagnostics.append("A parameter is at the edge of the search box.")

    params = make_params(family, transform.to_values(result.x))
    return _BaseFit(
        params=params,
        loglik=-float(result.fun),
        evaluations=evaluations,
        converged=converged,
        diagnostics=tuple(diagnostics),
    )


def _check_data(data):
    if data.n_total == 0:
        raise DomainError("Cannot fit an empty dataset.")
    if not data.shifted:
        raise DomainError("Fitting needs shifted counts.")


def fit_base(data, family, config=None, start=None):
    """Fit a base family by maximum likelihood.

    Parameters
    ----------
    data : CountDataset
        Shifted, nonempty data.
    family : Family or str
        "dln" or "hooked".
    config : SearchConfig, optional
        Optimizer settings.
    start : tuple, optional
        Starting parameters instead of the default initial guess.

    Returns
    -------
    FitResult
        With p = 0. Degenerate data give ``converged=False`` rather than an
        exception.
    """
    _check_data(data)
    family = Family(family)
    config = SearchConfig() if config is None else config
    values, counts = data.value_counts

    fit = _fit_values(values, counts, family, config, start=start)
    model = ZeroInflatedModel(base=fit.params)
    kind = ModelKind.of(family, inflated=False)
    for line in fit.diagnostics:
        logger.warning(f"{kind.value}: {line}")
    return FitResult(
        kind=kind,
        model=model,
        loglik=fit.loglik,
        n_params=kind.n_params,
        aic=aic(fit.loglik, kind.n_params),
        ks=ks_statistic(data, model),
        converged=fit.converged,
        evaluations=fit.evaluations,
        n_total=data.n_total,
        r=data.ones,
        diagnostics=fit.diagnostics,
    )


def _fit_at_k(task):
    """Fit the truncated data for one k. A top-level function for pickling."""
    values, counts, family, config, start, k, r, n_total = task
    fit = _fit_values(values, counts, family, config, start=start)
    log_f1 = float(distributions.logpmf(1, fit.params))
    loglik = zi_loglik_from_truncated(fit.loglik, log_f1, k, r, n_total)
    return k, fit, loglik


def _scan(data, family, ks, config, starts=None):
    """Fit every k in ks and return {k: (fit, converted loglik)}."""
    r, n_total = data.ones, data.n_total
    starts = {} if starts is None else starts
    points = {}

    if config.warm_start or config.workers == 1:
        previous = None
        for k in ks:
            values, counts = data.truncated_value_counts(k)
            start = previous if config.warm_start else None
            start = starts.get(k, start)
            _, fit, loglik = _fit_at_k(
                (values, counts, family, config, start, k, r, n_total)
            )
            points[k] = (fit, loglik)
            previous = fit.params.as_tuple()
        return points

    tasks = []
    for k in ks:
        values, counts = data.truncated_value_counts(k)
        tasks.append((values, counts, family, config, starts.get(k), k, r, n_total))
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        for k, fit, loglik in pool.map(_fit_at_k, tasks):
            points[k] = (fit, loglik)
    return points


def _count_local_maxima(logliks):
    n = len(logliks)
    count = 0
    for i, value in enumerate(logliks):
        left = logliks[i - 1] if i > 0 else -math.inf
        right = logliks[i + 1] if i < n - 1 else -math.inf
        if value > left and value > right:
            count += 1
    return count


def select_k(points):
    """The k with the highest log-likelihood; near-ties go to the smaller k.

    Parameters
    ----------
    points : dict
        Converted log-likelihood for each scanned k.

    Returns
    -------
    int
    """
    best = max(points.values())
    return min(k for k, loglik in points.items() if loglik >= best - TIE_TOLERANCE)


def scan_grid(r, n_total, config):
    """The k values of the first pass of the scan, always including 0 and r."""
    ks = list(range(0, r + 1, config.stride))
    if ks[-1] != r:
        ks.append(r)
    return [k for k in ks if k < n_total]


def fit_zero_inflated(data, family, config=None):
    """Fit a zero-inflated model by scanning k = 0..r.

    For each k, k ones are removed, the base family is fitted to the rest and
    the log-likelihood is converted to the full dataset with p = k/N. With
    ``stride=1`` every k is tried, which is exact up to the k/N grid in p.

    Parameters
    ----------
    data : CountDataset
    family : Family or str
    config : SearchConfig, optional

    Returns
    -------
    FitResult
        The zero-inflated fit at the best k, with the whole scan as ``profile``.
    """
    _check_data(data)
    family = Family(family)
    config = SearchConfig() if config is None else config
    kind = ModelKind.of(family, inflated=True)
    r, n_total = data.ones, data.n_total

    ks = scan_grid(r, n_total, config)
    logger.info(f"{kind.value}: scanning {len(ks)} values of k from 0 to {r}")
    points = _scan(data, family, ks, config)

    if config.refine and config.stride > 1:
        k_best = select_k({k: point[1] for k, point in points.items()})
        low = max(0, k_best - config.stride + 1)
        high = min(r, n_total - 1, k_best + config.stride - 1)
        extra = [k for k in range(low, high + 1) if k not in points]
        if len(extra) > 0:
            starts = None
            if config.warm_start:
                starts = {}
                for k in extra:
                    nearest = min(points, key=lambda j: (abs(j - k), j))
                    starts[k] = points[nearest][0].params.as_tuple()
            points.update(_scan(data, family, extra, config, starts=starts))

    logliks = {k: point[1] for k, point in points.items()}
    k_best = select_k(logliks)
    best_fit, loglik = points[k_best]

    profile = tuple(
        ProfilePoint(
            k=k,
            p=Fraction(k, n_total),
            loglik=points[k][1],
            params=points[k][0].params,
            converged=points[k][0].converged,
        )
        for k in sorted(points)
    )

    diagnostics = list(best_fit.diagnostics)
    maxima = _count_local_maxima([point.loglik for point in profile])
    if maxima > 1:
        text = (
            f"The likelihood profile over k has {maxima} local maxima, so it may "
            "not be smooth in p."
        )
        diagnostics.append(text)
        logger.warning(f"{kind.value}: {text}")
    if r == 0:
        diagnostics.append("There are no ones, so zero inflation is vacuous.")

    model = ZeroInflatedModel.from_k(best_fit.params, k_best, n_total)
    return FitResult(
        kind=kind,
        model=model,
        loglik=loglik,
        n_params=kind.n_params,
        aic=aic(loglik, kind.n_params),
        ks=ks_statistic(data, model),
        converged=best_fit.converged,
        evaluations=sum(point[0].evaluations for point in points.values()),
        n_total=n_total,
        r=r,
        diagnostics=tuple(diagnostics),
        profile=profile,
    )


def fit_fixed_k(data, family, k, config=None):
    """The zero-inflated model with exactly k ones removed, p = k/N."""
    _check_data(data)
    family = Family(family)
    config = SearchConfig() if config is None else config
    kind = ModelKind.of(family, inflated=True)
    r, n_total = data.ones, data.n_total
    if not 0 <= k <= r or k >= n_total:
        raise DomainError(f"k must be between 0 and r={r} (and below N), not {k}.")

    points = _scan(data, family, [k], config)
    fit, loglik = points[k]
    model = ZeroInflatedModel.from_k(fit.params, k, n_total)
    return FitResult(
        kind=kind,
        model=model,
        loglik=loglik,
        n_params=kind.n_params,
        aic=aic(loglik, kind.n_params),
        ks=ks_statistic(data, model),
        converged=fit.converged,
        evaluations=fit.evaluations,
        n_total=n_total,
        r=r,
        diagnostics=fit.diagnostics,
    )


def fit_model(data, kind, config=None):
    """Fit one of the four models."""
    kind = ModelKind(kind)
    if kind.inflated:
        return fit_zero_inflated(data, kind.family, config)
    return fit_base(data, kind.family, config)


def _fit_kind(data, kind, config):
    return fit_model(data, kind, config)


def fit_all_models(data, config=None):
    """Fit DLN, ZIDL, Hooked and ZIHP and select the best by AIC.

    A model that fails is recorded in ``errors`` of the comparison and does not
    stop the others.

    Parameters
    ----------
    data : CountDataset
    config : SearchConfig, optional
        With ``workers > 1`` the four fits run in separate processes.

    Returns
    -------
    ModelComparison
    """
    _check_data(data)
    config = SearchConfig() if config is None else config
    results = {}
    errors = {}

    if config.workers > 1:
        inner = replace(config, workers=1)
        with ProcessPoolExecutor(max_workers=min(config.workers, 4)) as pool:
            futures = {
                kind: pool.submit(_fit_kind, data, kind, inner) for kind in ModelKind
            }
            for kind, future in futures.items():
                try:
                    results[kind] = future.result()
                except (ArithmeticError, ValueError, RuntimeError) as e:
                    errors[kind] = str(e)
                    logger.warning(f"Fitting {kind.value} failed: {e}")
    else:
        for kind in ModelKind:
            try:
                results[kind] = _fit_kind(data, kind, config)
            except (ArithmeticError, ValueError, RuntimeError) as e:
                errors[kind] = str(e)
                logger.warning(f"Fitting {kind.value} failed: {e}")

    return compare(results, errors)
