# -*- coding: utf-8 -*-

import citation_fit_step


class CompareStep(object):
    """Helper class for the stevedore integration of the Compare step."""

    my_description = {
        "description": "Fit all four models and choose the best by AIC",
        "group": "Fitting",
        "name": "Compare",
    }

    def __init__(self, flowchart=None, gui=None):
        pass

    def create_node(self, flowchart=None, **kwargs):
        """Create and return the new node object."""
        return citation_fit_step.Compare(flowchart=flowchart, **kwargs)

    def create_tk_node(self, canvas=None, **kwargs):
        """Create and return the graphical Tk node object."""
        return citation_fit_step.TkCompare(canvas=canvas, **kwargs)

    def description(self):
        return CompareStep.my_description
