# -*- coding: utf-8 -*-

"""The graphical part of a Citation Fit step"""

import pprint  # noqa: F401
import tkinter as tk
import tkinter.ttk as ttk

import citation_fit_step  # noqa: F401
import seamm
import seamm_widgets as sw


class TkCitationFit(seamm.TkNode):
    """
    The graphical part of a Citation Fit step in a flowchart.

    The dialog holds the data controls at the top and the subflowchart of Fit
    and Compare steps below them.

    Attributes
    ----------
    tk_flowchart : TkFlowchart = None
        The flowchart that we belong to.
    node : Node = None
        The corresponding node of the non-graphical flowchart
    namespace : str
        The stevedore namespace for the substeps.
    self[widget] : dict
        A dictionary of tk widgets built using the information
        contained in citation_fit_parameters.py

    See Also
    --------
    CitationFit, TkCitationFit,
    CitationFitParameters,
    """

    def __init__(
        self,
        tk_flowchart=None,
        node=None,
        namespace="org.molssi.seamm.citation_fit.tk",
        canvas=None,
        x=None,
        y=None,
        w=200,
        h=50,
    ):
        """Create the node; the subflowchart uses the stevedore namespace given."""
        self.namespace = namespace
        self.dialog = None

        super().__init__(
            tk_flowchart=tk_flowchart,
            node=node,
            canvas=canvas,
            x=x,
            y=y,
            w=w,
            h=h,
        )
        self.create_dialog()

    def create_dialog(self):
        """
        Create the dialog: the data controls and the subflowchart.

        See Also
        --------
        TkCitationFit.reset_dialog
        """

        frame = super().create_dialog(title="Citation Fit")
        # make it large!
        screen_w = self.dialog.winfo_screenwidth()
        screen_h = self.dialog.winfo_screenheight()
        w = int(0.9 * screen_w)
        h = int(0.8 * screen_h)
        x = int(0.05 * screen_w / 2)
        y = int(0.1 * screen_h / 2)

        self.dialog.geometry(f"{w}x{h}+{x}+{y}")

        # Shortcut for parameters
        P = self.node.parameters

        d_frame = self["data frame"] = ttk.LabelFrame(
            frame,
            borderwidth=4,
            relief="sunken",
            text="Citation Counts",
            labelanchor="n",
            padding=10,
        )
        widgets = []
        row = 0
        for key in citation_fit_step.CitationFitParameters.parameters:
            w = self[key] = P[key].widget(d_frame)
            w.grid(row=row, column=0, sticky=tk.EW)
            widgets.append(w)
            row += 1
        sw.align_labels(widgets, sticky=tk.E)
        d_frame.pack(side=tk.TOP, fill=tk.X)

        flowchart_frame = ttk.Frame(frame)
        flowchart_frame.pack(side=tk.TOP, fill=tk.BOTH, expand=True)

        self.tk_subflowchart = seamm.TkFlowchart(
            master=flowchart_frame,
            flowchart=self.node.subflowchart,
            namespace=self.namespace,
        )
        self.tk_subflowchart.draw()

    def right_click(self, event):
        """
        Handles the right click event on the node.

        Parameters
        ----------
        event : Tk Event

        See Also
        --------
        TkCitationFit.edit
        """

        super().right_click(event)
        self.popup_menu.add_command(label="Edit..", command=self.edit)

        self.popup_menu.tk_popup(event.x_root, event.y_root, 0)
