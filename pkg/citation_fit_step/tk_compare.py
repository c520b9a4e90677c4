# -*- coding: utf-8 -*-

"""The graphical part of a Compare step"""

import citation_fit_step


class TkCompare(citation_fit_step.TkFit):
    """
    The graphical part of a Compare step in a flowchart.

    The same dialog as for Fit, without the family and zero-inflation
    controls.

    See Also
    --------
    Compare, TkCompare,
    CompareParameters,
    """

    def create_dialog(self, title="Compare"):
        super().create_dialog(title=title)
