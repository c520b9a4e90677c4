# -*- coding: utf-8 -*-

"""Non-graphical part of the Citation Fit step in a SEAMM flowchart
"""

import json
import logging
from pathlib import Path
import pprint  # noqa: F401
import sys
import textwrap

import citation_fit_step
import seamm
import seamm_util
from seamm_util import CompactJSONEncoder
import seamm_util.printing as printing
from seamm_util.printing import FormattedText as __

from . import ingest, report
from .errors import CitationFitError

# "printer" writes to step.out in the working directory of the step.
logger = logging.getLogger(__name__)
printer = printing.getPrinter("Citation Fit")


class CitationFit(seamm.Node):
    """
    The non-graphical part of a Citation Fit step in a flowchart.

    Reads the citation counts, optionally removes magazine-like journals, and
    hands the dataset to each step of its subflowchart.

    Attributes
    ----------
    subflowchart : seamm.Flowchart
        The Fit and Compare steps to run on the dataset.

    parameters : CitationFitParameters
        The control parameters for Citation Fit.

    data : CountDataset
        The dataset of the last run, after filtering.

    See Also
    --------
    TkCitationFit,
    CitationFit, CitationFitParameters
    """

    def __init__(
        self,
        flowchart=None,
        title="Citation Fit",
        namespace="org.molssi.seamm.citation_fit",
        extension=None,
        logger=logger,
    ):
        """A step for fitting citation counts in a SEAMM flowchart.

        Parameters
        ----------
        flowchart: seamm.Flowchart
            The non-graphical flowchart that contains this step.

        title: str
            The name displayed in the flowchart.
        namespace : str
            The namespace for the plug-ins of the subflowchart
        extension: None
            Not yet implemented
        logger : Logger = logger
            The logger to use and pass to parent classes

        Returns
        -------
        None
        """
        logger.debug(f"Creating Citation Fit {self}")
        self.subflowchart = seamm.Flowchart(
            parent=self, name="Citation Fit", namespace=namespace
        )  # yapf: disable

        super().__init__(
            flowchart=flowchart,
            title=title,
            extension=extension,
            module=__name__,
            logger=logger,
        )  # yapf: disable

        self._metadata = citation_fit_step.metadata
        self.parameters = citation_fit_step.CitationFitParameters()
        self.data = None

    @property
    def version(self):
        """The semantic version of this module."""
        return citation_fit_step.__version__

    def set_id(self, node_id):
        """Set the id for node to a given tuple"""
        self._id = node_id

        # and set our subnodes
        self.subflowchart.set_ids(self._id)

        return self.next()

    def create_parser(self):
        """Setup the command-line / config file parser"""
        parser_name = self.step_type
        parser = seamm_util.getParser(name="SEAMM")

        # Remember if the parser exists ... this type of step may have been
        # found before
        parser_exists = parser.exists(parser_name)

        # Create the standard options, e.g. log-level
        result = super().create_parser(name=parser_name)

        if parser_exists:
            return result

        return result

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

        self.subflowchart.root_directory = self.flowchart.root_directory

        text = self.header + "\n"
        intro = "Reading the citation counts from {input file} ({format} format)"
        if self.is_expr(P["threshold"]) or P["threshold"] > 0:
            intro += (
                " and removing every journal with less than {threshold}% of its "
                "articles cited"
            )
        intro += ". The counts are shifted by one before fitting."
        text += __(intro, **P, indent=4 * " ").__str__() + "\n\n"

        # Get the first real node
        node = self.subflowchart.get_node("1").next()

        while node is not None:
            try:
                text += __(node.description_text(), indent=3 * " ").__str__()
            except Exception as e:
                print(f"Error describing citation_fit flowchart: {e} in {node}")
                logger.critical(
                    f"Error describing citation_fit flowchart: {e} in {node}"
                )
                raise
            except:  # noqa: E722
                print(
                    "Unexpected error describing the citation_fit flowchart: "
                    f"{sys.exc_info()[0]} in {node}"
                )
                raise
            text += "\n"
            node = node.next()

        return text

    def load(self, P):
        """Read and, if asked, filter the dataset."""
        path = Path(P["input file"]).expanduser()
        if not path.is_absolute() and self.flowchart is not None:
            root = self.flowchart.root_directory
            if root is not None and not path.exists():
                path = Path(root) / path
        if not path.exists():
            raise RuntimeError(f"The citation counts file '{path}' does not exist.")

        try:
            data = ingest.load(path, format=P["format"])
            removal = None
            if P["threshold"] > 0:
                data, removal = ingest.filter_journals(data, P["threshold"])
        except CitationFitError as e:
            raise RuntimeError(f"Could not read the citation counts in {path}: {e}")
        return data, removal

    def run(self):
        """Run a Citation Fit step.

        Parameters
        ----------
        None

        Returns
        -------
        seamm.Node
            The next node object in the flowchart.
        """
        # Create the directory
        directory = Path(self.directory)
        directory.mkdir(parents=True, exist_ok=True)

        next_node = super().run(printer)

        P = self.parameters.current_values_to_dict(
            context=seamm.flowchart_variables._data
        )

        # Print our header to the main output
        printer.important(self.header)
        printer.important("")

        self.data, removal = self.load(P)
        label = P["label"]

        text_lines = []
        if removal is not None:
            text_lines.append(
                f"Removed {len(removal.removed)} journals with less than "
                f"{removal.threshold:.1f}% of their articles cited: "
                f"{removal.articles_removed} articles, {removal.uncited_removed} "
                "of them uncited."
            )
            if len(removal.removed) > 0:
                frame = report.journal_frame(removal.removed)
                (directory / "removed_journals.csv").write_text(
                    report.frame_to_csv(frame)
                )
            text_lines.append("")
        text_lines.append("                     Dataset")
        text_lines.append(report.summary_table(ingest.summarize(self.data), label))
        text_lines.append("\n")
        printer.normal(textwrap.indent("\n".join(text_lines), self.indent + 4 * " "))

        # Get the first real node
        node1 = self.subflowchart.get_node("1").next()

        # Print what we will do as we get the input
        schema = {"schema name": "citation_fit", "schema version": "1.0"}
        node = node1
        nodes = []
        while node is not None:
            nodes.append(node)
            schema = node.get_input(schema)
            for value in node.description:
                printer.important(value)
                printer.important(" ")
            node = node.next()

        input_data = json.dumps(
            schema, indent=4, cls=CompactJSONEncoder, sort_keys=True
        )
        logger.info("input.json:\n" + input_data)
        (directory / "input.json").write_text(input_data)

        for node in nodes:
            node.analyze(data=self.data, label=label)

        self.references.cite(
            raw=self._bibliography["SciPy"],
            alias="SciPy",
            module="citation_fit_step",
            level=2,
            note="The optimizer and special functions used for the fits.",
        )
        self.references.cite(
            raw=self._bibliography["NumPy"],
            alias="NumPy",
            module="citation_fit_step",
            level=2,
            note="The array library and random number generators.",
        )

        return next_node
