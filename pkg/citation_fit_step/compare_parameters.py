# -*- coding: utf-8 -*-
"""
Control parameters for the Compare step in a SEAMM flowchart
"""

import logging
import seamm

from .fit_parameters import FitParameters

logger = logging.getLogger(__name__)


class CompareParameters(seamm.Parameters):
    """
    The control parameters for comparing the four models.

    The scan controls are those of :class:`FitParameters`; the family and the
    zero inflation are not needed since every combination is fitted.

    See Also
    --------
    Compare, TkCompare, CompareStep
    """

    parameters = {
        key: value
        for key, value in FitParameters.parameters.items()
        if key not in ("family", "zero inflation")
    }
    parameters["workers"] = {
        "default": 1,
        "kind": "integer",
        "default_units": "",
        "enumeration": tuple(),
        "format_string": "d",
        "description": "Processes:",
        "help_text": "The number of processes used to fit the four models.",
    }

    def __init__(self, defaults={}, data=None):
        logger.debug("CompareParameters.__init__")

        super().__init__(
            defaults={**CompareParameters.parameters, **defaults}, data=data
        )
