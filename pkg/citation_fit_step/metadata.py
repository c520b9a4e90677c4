# -*- coding: utf-8 -*-

"""This file contains metadata describing the results from Citation Fit
"""

metadata = {}

"""Results that the fitting steps produce.

`metadata["results"]` describes the results that the steps can store in
variables or tables. The keys are the internal names of the results, and the
values describe them.

Fields
______

calculation : [str]
    Which substeps produce the result, matched against `self._calculation` of
    the step: "fit" or "compare".

description : str
    A human-readable description of the result.

dimensionality : str
    "scalar" for all of these results.

type : str
    The type of the data: string, integer, float or boolean.

format : str
    Optional format for printing the value.
"""
metadata["results"] = {
    "model": {
        "calculation": ["fit", "compare"],
        "description": "The model: DLN, ZIDL, Hooked or ZIHP",
        "dimensionality": "scalar",
        "type": "string",
    },
    "loglik": {
        "calculation": ["fit"],
        "description": "The log-likelihood of the fitted model",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".1f",
    },
    "aic": {
        "calculation": ["fit", "compare"],
        "description": "The Akaike information criterion",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".1f",
    },
    "ks": {
        "calculation": ["fit"],
        "description": "The Kolmogorov-Smirnov statistic",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".3f",
    },
    "p": {
        "calculation": ["fit"],
        "description": "The proportion of uncitable articles",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".4f",
    },
    "k": {
        "calculation": ["fit"],
        "description": "The number of uncitable articles",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "uncitable_pct": {
        "calculation": ["fit"],
        "description": "The percentage of articles that are uncitable",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "mu": {
        "calculation": ["fit"],
        "description": "The lognormal location, mu",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".4f",
    },
    "sigma": {
        "calculation": ["fit"],
        "description": "The lognormal scale, sigma",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".4f",
    },
    "alpha": {
        "calculation": ["fit"],
        "description": "The power-law exponent, alpha",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".4f",
    },
    "B": {
        "calculation": ["fit"],
        "description": "The power-law shift B, for counts shifted by one",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".4f",
    },
    "B_unshifted": {
        "calculation": ["fit"],
        "description": "The power-law shift B, for the raw counts",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".4f",
    },
    "converged": {
        "calculation": ["fit", "compare"],
        "description": "Whether the fit converged",
        "dimensionality": "scalar",
        "type": "boolean",
    },
    "winner": {
        "calculation": ["compare"],
        "description": "The model with the lowest AIC",
        "dimensionality": "scalar",
        "type": "string",
    },
    "best_improving": {
        "calculation": ["compare"],
        "description": "The best model, using zero inflation only where it improves",
        "dimensionality": "scalar",
        "type": "string",
    },
    "aic_DLN": {
        "calculation": ["compare"],
        "description": "The AIC of the discretised lognormal",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".1f",
    },
    "aic_ZIDL": {
        "calculation": ["compare"],
        "description": "The AIC of the zero-inflated discretised lognormal",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".1f",
    },
    "aic_Hooked": {
        "calculation": ["compare"],
        "description": "The AIC of the hooked power law",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".1f",
    },
    "aic_ZIHP": {
        "calculation": ["compare"],
        "description": "The AIC of the zero-inflated hooked power law",
        "dimensionality": "scalar",
        "type": "float",
        "format": ".1f",
    },
}
