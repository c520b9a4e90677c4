# -*- coding: utf-8 -*-

"""
citation_fit_step
A SEAMM plug-in for fitting heavy-tailed models to citation counts
"""

from importlib.metadata import version, PackageNotFoundError

# The numerical library, usable without a flowchart
from .errors import CitationFitError, DomainError, ParseError, UsageError  # noqa: F401
from .distributions import Family, HookedParams, DlnParams  # noqa: F401
from .zero_inflation import ModelKind, ZeroInflatedModel  # noqa: F401
from .ingest import CountDataset, load, save, summarize, filter_journals  # noqa: F401
from .fitting import (  # noqa: F401
    SearchConfig,
    FitResult,
    fit_base,
    fit_zero_inflated,
    fit_all_models,
)
from .evaluation import ModelComparison, aic, ks_statistic  # noqa: F401
from .sampling import SyntheticSpec, JournalStructure, sample  # noqa: F401

# Bring up the classes so that they appear to be directly in
# the citation_fit_step package.

from .metadata import metadata  # noqa: F401

from .citation_fit import CitationFit  # noqa: F401, E501
from .citation_fit_step import CitationFitStep  # noqa: F401, E501
from .citation_fit_parameters import CitationFitParameters  # noqa: F401
from .tk_citation_fit import TkCitationFit  # noqa: F401, E501

from .fit_step import FitStep  # noqa: F401
from .fit import Fit  # noqa: F401
from .fit_parameters import FitParameters  # noqa: F401
from .tk_fit import TkFit  # noqa: F401

from .compare_step import CompareStep  # noqa: F401
from .compare import Compare  # noqa: F401
from .compare_parameters import CompareParameters  # noqa: F401
from .tk_compare import TkCompare  # noqa: F401

__author__ = "Paul Saxe"
__email__ = "psaxe@molssi.org"
try:
    __version__ = version("citation_fit_step")
except PackageNotFoundError:
    __version__ = "0.0.0+unknown"
del version, PackageNotFoundError
