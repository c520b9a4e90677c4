# -*- coding: utf-8 -*-
"""
Control parameters for the Citation Fit step in a SEAMM flowchart
"""

import logging
import seamm
import pprint  # noqa: F401

logger = logging.getLogger(__name__)


class CitationFitParameters(seamm.Parameters):
    """
    The control parameters for Citation Fit: where the citation counts come
    from and which journals to drop before fitting.

    Each entry gives the default, kind, enumeration, format string, prompt
    and help text of one control. Values may be variables such as $CITATIONS.
    """

    parameters = {
        "input file": {
            "default": "citations.csv",
            "kind": "string",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "",
            "description": "Citation counts:",
            "help_text": "The file with the raw citation counts.",
        },
        "format": {
            "default": "csv",
            "kind": "enum",
            "default_units": "",
            "enumeration": ("plain", "csv"),
            "format_string": "",
            "description": "Format:",
            "help_text": (
                "'plain' is one count per line. 'csv' needs a 'citations' column "
                "and may have a 'journal' column."
            ),
        },
        "threshold": {
            "default": 0.0,
            "kind": "float",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": ".1f",
            "description": "Cited threshold (%):",
            "help_text": (
                "Remove every journal with less than this percentage of its "
                "articles cited. 0 keeps all journals. Needs a 'journal' column."
            ),
        },
        "label": {
            "default": "",
            "kind": "string",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "",
            "description": "Subject:",
            "help_text": "A name for the dataset, used in the tables.",
        },
    }

    def __init__(self, defaults={}, data=None):
        """Start from the parameters above, updated by defaults and then data."""
        logger.debug("CitationFitParameters.__init__")

        super().__init__(
            defaults={**CitationFitParameters.parameters, **defaults}, data=data
        )
