# -*- coding: utf-8 -*-

"""Non-graphical part of the Fit step in a Citation Fit flowchart
"""

import logging
from pathlib import Path
import pprint  # noqa: F401
import textwrap

import citation_fit_step
import seamm
import seamm_util.printing as printing
from seamm_util.printing import FormattedText as __

from . import fitting, report
from .errors import CitationFitError
from .fit_parameters import FAMILIES, search_config

# "printer" writes to step.out in the working directory of the step.
logger = logging.getLogger(__name__)
printer = printing.getPrinter("Citation Fit")


class Fit(seamm.Node):
    """
    The non-graphical part of a Fit step in a flowchart.

    Fits one family, and optionally its zero-inflated variant, to the dataset
    handed down by the Citation Fit step.

    Attributes
    ----------
    parameters : FitParameters
        The control parameters for Fit.
    fits : [FitResult]
        The fits from the last run, base family first.

    See Also
    --------
    TkFit,
    Fit, FitParameters
    """

    def __init__(self, flowchart=None, title="Fit", extension=None, logger=logger):
        """A substep for fitting in a subflowchart for Citation Fit.

        Parameters
        ----------
        flowchart: seamm.Flowchart
            The non-graphical flowchart that contains this step.

        title: str
            The name displayed in the flowchart.
        extension: None
            Not yet implemented
        logger : Logger = logger
            The logger to use and pass to parent classes

        Returns
        -------
        None
        """
        logger.debug(f"Creating Fit {self}")

        super().__init__(
            flowchart=flowchart,
            title=title,
            extension=extension,
            module=__name__,
            logger=logger,
        )  # yapf: disable

        self._calculation = "fit"
        self._metadata = citation_fit_step.metadata
        self.parameters = citation_fit_step.FitParameters()
        self.fits = []

    @property
    def header(self):
        """A printable header for this section of output"""
        return "Step {}: {}".format(".".join(str(e) for e in self._id), self.title)

    @property
    def version(self):
        """The semantic version of this module."""
        return citation_fit_step.__version__

    def description_text(self, P=None):
        """Create the text description of what this step will do.
        The dictionary of control values is passed in as P so that
        the code can test values, etc.

        Parameters
        ----------
        P: dict
            An optional dictionary of the current values of the control
            parameters.
        Returns
        -------
        str
            A description of the current step.
        """
        if not P:
            P = self.parameters.values_to_dict()

        text = "Fitting the {family} to the citation counts by maximum likelihood"
        if P["zero inflation"]:
            text += ", with and without zero inflation."
            if P["stride"] == 1:
                text += " Every possible number of uncitable articles will be tried."
            else:
                text += " Every {stride}th number of uncitable articles will be tried"
                if P["refine"]:
                    text += ", then every number near the best one."
                else:
                    text += "."
        else:
            text += "."

        return self.header + "\n" + __(text, **P, indent=4 * " ").__str__()

    def get_input(self, schema):
        """Add the request for this step to the workflow and describe it.

        Parameters
        ----------
        schema : dict
            The workflow so far.

        Returns
        -------
        dict
            The workflow with this step added.
        """
        P = self.parameters.current_values_to_dict(
            context=seamm.flowchart_variables._data
        )

        self.description = []
        self.description.append(__(self.description_text(P), **P, indent=self.indent))

        step = {
            "calculation": self._calculation,
            "family": FAMILIES[P["family"]],
            "zero inflation": P["zero inflation"],
            "search": {
                "stride": P["stride"],
                "refine": P["refine"],
                "warm start": P["warm start"],
                "max iterations": P["max iterations"],
            },
        }
        schema.setdefault("workflow", []).append(step)
        return schema

    def fit(self, data, P):
        """Run the fits, returning them base family first."""
        config = search_config(P)
        family = FAMILIES[P["family"]]
        fits = [fitting.fit_base(data, family, config)]
        if P["zero inflation"]:
            fits.append(fitting.fit_zero_inflated(data, family, config))
        return fits

    def analyze(self, indent="", data=None, label="", **kwargs):
        """Fit the dataset, print the table and store the results.

        Parameters
        ----------
        indent: str
            An extra indentation for the output
        data : CountDataset
            The shifted citation counts.
        label : str
            The subject, for the table.
        """
        P = self.parameters.current_values_to_dict(
            context=seamm.flowchart_variables._data
        )

        directory = Path(self.directory)
        directory.mkdir(parents=True, exist_ok=True)

        try:
            self.fits = self.fit(data, P)
        except CitationFitError as e:
            raise RuntimeError(f"Fitting the {P['family']} failed: {e}")

        text_lines = []
        text_lines.append(f"                     {P['family'].capitalize()}")
        text_lines.append(report.fit_table(self.fits, label=label))
        for fit in self.fits:
            for line in fit.diagnostics:
                text_lines.append(f"{fit.kind.value}: {line}")
        text_lines.append("\n")

        text = textwrap.indent("\n".join(text_lines), self.indent + 4 * " ")
        printer.normal(text)

        main = self.fits[-1]
        result = report.fit_to_dict(main)
        if len(self.fits) > 1:
            result["base"] = report.fit_to_dict(self.fits[0])
            profile = report.profile_frame(main)
            (directory / "profile.csv").write_text(report.frame_to_csv(profile))
        (directory / "fit.json").write_text(report.dumps_json(result))

        row = report.ReportRow.from_fit(main, label=label)
        results = {
            "model": main.kind.value,
            "loglik": main.loglik,
            "aic": main.aic,
            "ks": main.ks,
            "p": main.model.p_float,
            "k": main.model.k,
            "uncitable_pct": row.uncitable_pct,
            "converged": main.converged,
            **row.params,
        }
        self.store_results(configuration=None, data=results)
