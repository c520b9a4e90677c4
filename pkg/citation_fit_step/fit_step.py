# -*- coding: utf-8 -*-

import citation_fit_step


class FitStep(object):
    """Helper class for the stevedore integration of the Fit step."""

    my_description = {
        "description": "Fit one family, with or without zero inflation",
        "group": "Fitting",
        "name": "Fit",
    }

    def __init__(self, flowchart=None, gui=None):
        pass

    def create_node(self, flowchart=None, **kwargs):
        """Create and return the new node object."""
        return citation_fit_step.Fit(flowchart=flowchart, **kwargs)

    def create_tk_node(self, canvas=None, **kwargs):
        """Create and return the graphical Tk node object."""
        return citation_fit_step.TkFit(canvas=canvas, **kwargs)

    def description(self):
        return FitStep.my_description
