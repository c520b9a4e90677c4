# -*- coding: utf-8 -*-

"""Non-graphical part of the Compare step in a Citation Fit flowchart
"""

import logging
from pathlib import Path
import textwrap

import citation_fit_step
import seamm
import seamm_util.printing as printing
from seamm_util.printing import FormattedText as __

from . import fitting, report
from .errors import CitationFitError
from .fit_parameters import search_config

logger = logging.getLogger(__name__)
printer = printing.getPrinter("Citation Fit")


class Compare(citation_fit_step.Fit):
    """
    The non-graphical part of a Compare step in a flowchart.

    Fits the discretised lognormal and the hooked power law, each with and
    without zero inflation, and selects the model with the lowest AIC.

    Attributes
    ----------
    parameters : CompareParameters
        The control parameters for Compare.
    comparison : ModelComparison
        The result of the last run.

    See Also
    --------
    TkCompare,
    Compare, CompareParameters
    """

    def __init__(self, flowchart=None, title="Compare", extension=None, logger=logger):
        """A substep for comparing models in a subflowchart for Citation Fit.

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
        logger.debug(f"Creating Compare {self}")

        super().__init__(
            flowchart=flowchart,
            title=title,
            extension=extension,
            logger=logger,
        )

        self._calculation = "compare"
        self._metadata = citation_fit_step.metadata
        self.parameters = citation_fit_step.CompareParameters()
        self.comparison = None

    def description_text(self, P=None):
        """Create the text description of what this step will do.

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

        text = (
            "Fitting the discretised lognormal and the hooked power law, each with "
            "and without zero inflation, and choosing the model with the lowest AIC."
        )
        if P["stride"] != 1:
            text += (
                " Only every {stride}th number of uncitable articles will be tried, "
                "so the zero-inflated fits are approximate."
            )

        return self.header + "\n" + __(text, **P, indent=4 * " ").__str__()

    def get_input(self, schema):
        P = self.parameters.current_values_to_dict(
            context=seamm.flowchart_variables._data
        )

        self.description = []
        self.description.append(__(self.description_text(P), **P, indent=self.indent))

        step = {
            "calculation": self._calculation,
            "search": {
                "stride": P["stride"],
                "refine": P["refine"],
                "warm start": P["warm start"],
                "max iterations": P["max iterations"],
                "workers": P["workers"],
            },
        }
        schema.setdefault("workflow", []).append(step)
        return schema

    def analyze(self, indent="", data=None, label="", **kwargs):
        """Fit all four models, print the AIC table and store the results.

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
            self.comparison = fitting.fit_all_models(data, search_config(P))
        except CitationFitError as e:
            raise RuntimeError(f"None of the models could be fitted: {e}")
        comparison = self.comparison
        self.fits = list(comparison.results.values())

        winner = comparison.winner
        best = comparison.best_excluding_unimproved()

        text_lines = []
        text_lines.append(f"                     {label} Models".rstrip())
        text_lines.append(report.comparison_table(comparison))
        text_lines.append(
            f"The best model is {winner.value}, with an AIC of "
            f"{comparison.results[winner].aic:.1f}."
        )
        if best is not None and best is not winner:
            text_lines.append(
                f"Using zero inflation only where it improves the log-likelihood "
                f"by more than 1, the best model is {best.value}."
            )
        if comparison.tie_note is not None:
            text_lines.append(comparison.tie_note)
        for kind, message in comparison.errors.items():
            text_lines.append(f"{kind.value} could not be fitted: {message}")
        text_lines.append("\n")

        text = textwrap.indent("\n".join(text_lines), self.indent + 4 * " ")
        printer.normal(text)

        (directory / "comparison.json").write_text(
            report.comparison_to_json(comparison)
        )

        results = {
            "model": winner.value,
            "winner": winner.value,
            "best_improving": None if best is None else best.value,
            "aic": comparison.results[winner].aic,
            "converged": comparison.results[winner].converged,
        }
        for kind, fit in comparison.results.items():
            results[f"aic_{kind.value}"] = fit.aic
        self.store_results(configuration=None, data=results)
