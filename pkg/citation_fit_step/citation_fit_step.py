# -*- coding: utf-8 -*-

import citation_fit_step


class CitationFitStep(object):
    """Helper class needed for the stevedore integration.

    This must provide a `description()` method that returns a dict containing a
    description of this node, and `create_node()` and `create_tk_node()` methods
    for creating the graphical and non-graphical nodes.

    my_description : {str, str}
        The description, menu group and name of the step, shown to users who
        are not experts in statistics.
    """

    my_description = {
        "description": (
            "Fit lognormal and power-law models, with zero inflation, to citation "
            "counts"
        ),
        "group": "Analysis",
        "name": "Citation Fit",
    }

    def __init__(self, flowchart=None, gui=None):
        pass

    def create_node(self, flowchart=None, **kwargs):
        """The non-graphical Citation Fit node, which holds the subflowchart."""
        return citation_fit_step.CitationFit(flowchart=flowchart, **kwargs)

    def create_tk_node(self, canvas=None, **kwargs):
        """The graphical node, a TkCitationFit on the given canvas."""
        return citation_fit_step.TkCitationFit(canvas=canvas, **kwargs)

    def description(self):
        """Return a description of what this step does.

        Returns
        -------
        description : dict(str, str)
        """
        return CitationFitStep.my_description
