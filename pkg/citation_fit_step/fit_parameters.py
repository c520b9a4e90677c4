# -*- coding: utf-8 -*-
"""
Control parameters for the Fit step in a SEAMM flowchart
"""

import logging
import seamm
import pprint  # noqa: F401

from .fitting import SearchConfig

logger = logging.getLogger(__name__)

FAMILIES = {
    "discretised lognormal": "dln",
    "hooked power law": "hooked",
}


class FitParameters(seamm.Parameters):
    """
    The control parameters for fitting one family to the citation counts.

    The keys are the parameters of this step; the values are dictionaries with
    the fields "default", "kind", "default_units", "enumeration",
    "format_string", "description" and "help_text", as for every SEAMM step.

    See Also
    --------
    Fit, TkFit, FitStep
    """

    parameters = {
        "family": {
            "default": "discretised lognormal",
            "kind": "enum",
            "default_units": "",
            "enumeration": tuple(FAMILIES),
            "format_string": "",
            "description": "Family:",
            "help_text": "The family of distributions to fit to the shifted counts.",
        },
        "zero inflation": {
            "default": "yes",
            "kind": "boolean",
            "default_units": "",
            "enumeration": ("yes", "no"),
            "format_string": "",
            "description": "Also fit zero inflation:",
            "help_text": (
                "Whether to fit the zero-inflated variant as well, which treats a "
                "proportion of the uncited articles as uncitable."
            ),
        },
        "stride": {
            "default": 1,
            "kind": "integer",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "d",
            "description": "Step in k:",
            "help_text": (
                "The step between the numbers of uncited articles tried as "
                "uncitable. 1 tries them all and finds the best exactly."
            ),
        },
        "refine": {
            "default": "no",
            "kind": "boolean",
            "default_units": "",
            "enumeration": ("yes", "no"),
            "format_string": "",
            "description": "Refine around the best k:",
            "help_text": "After a scan with a step > 1, try every k near the best.",
        },
        "warm start": {
            "default": "yes",
            "kind": "boolean",
            "default_units": "",
            "enumeration": ("yes", "no"),
            "format_string": "",
            "description": "Warm start:",
            "help_text": "Start the fit at each k from the fit at the previous k.",
        },
        "max iterations": {
            "default": 2000,
            "kind": "integer",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "d",
            "description": "Maximum iterations:",
            "help_text": "The iteration limit of the simplex optimizer.",
        },
        "results": {
            "default": {},
            "kind": "dictionary",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "",
            "description": "results",
            "help_text": "The results to save to variables or in tables.",
        },
    }

    def __init__(self, defaults={}, data=None):
        """Start from the parameters above, updated by defaults and then data."""
        logger.debug("FitParameters.__init__")

        super().__init__(defaults={**FitParameters.parameters, **defaults}, data=data)


def search_config(P):
    """The SearchConfig for the current values of the control parameters."""
    return SearchConfig(
        stride=P["stride"],
        refine=P["refine"],
        warm_start=P["warm start"],
        max_iterations=P["max iterations"],
        workers=P.get("workers", 1),
    )
