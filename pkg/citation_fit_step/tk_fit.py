# -*- coding: utf-8 -*-

"""The graphical part of a Fit step"""

import tkinter as tk
import tkinter.ttk as ttk

import citation_fit_step  # noqa: F401
import seamm
import seamm_widgets as sw


class TkFit(seamm.TkNode):
    """
    The graphical part of a Fit step in a flowchart.

    The scan controls are only shown when zero inflation is fitted, and the
    refine control only when the step in k is more than 1.

    See Also
    --------
    Fit, TkFit,
    FitParameters,
    """

    # The parameters laid out by the dialog, in order.
    scan_keys = ("stride", "refine", "warm start", "max iterations")

    def __init__(
        self,
        tk_flowchart=None,
        node=None,
        canvas=None,
        x=None,
        y=None,
        w=200,
        h=50,
    ):
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

    def create_dialog(self, title="Fit"):
        """
        Create the dialog, with the model controls in one frame and the
        optimizer controls in another.

        See Also
        --------
        TkFit.reset_dialog
        """

        super().create_dialog(title=title)

        # Shortcut for parameters
        P = self.node.parameters

        m_frame = self["model frame"] = ttk.LabelFrame(
            self["frame"],
            borderwidth=4,
            relief="sunken",
            text="Model",
            labelanchor="n",
            padding=10,
        )
        s_frame = self["scan frame"] = ttk.LabelFrame(
            self["frame"],
            borderwidth=4,
            relief="sunken",
            text="Search",
            labelanchor="n",
            padding=10,
        )

        for key in P:
            if key == "results":
                continue
            parent = s_frame if key in self.scan_keys else m_frame
            self[key] = P[key].widget(parent)

        for key in ("zero inflation", "stride"):
            if key in self.node.parameters:
                self[key].bind("<<ComboboxSelected>>", self.reset_dialog)
                self[key].bind("<Return>", self.reset_dialog)
                self[key].bind("<FocusOut>", self.reset_dialog)

        self.reset_dialog()
        self.setup_results()

    def reset_dialog(self, widget=None):
        """Lay out the widgets according to the current values."""
        for frame in (self["model frame"], self["scan frame"]):
            for slave in frame.grid_slaves():
                slave.grid_forget()

        P = self.node.parameters
        inflated = "zero inflation" not in P or self["zero inflation"].get() != "no"
        stride = self["stride"].get()

        widgets = []
        row = 0
        for key in ("family", "zero inflation"):
            if key in self.node.parameters:
                self[key].grid(row=row, column=0, sticky=tk.EW)
                widgets.append(self[key])
                row += 1
        if len(widgets) > 0:
            sw.align_labels(widgets, sticky=tk.E)
            self["model frame"].grid(row=0, column=0, sticky=tk.N)

        widgets = []
        row = 0
        if inflated:
            for key in self.scan_keys:
                if key == "refine" and stride in ("1", 1):
                    continue
                self[key].grid(row=row, column=0, sticky=tk.EW)
                widgets.append(self[key])
                row += 1
        else:
            self["max iterations"].grid(row=row, column=0, sticky=tk.EW)
            widgets.append(self["max iterations"])
            row += 1
        if "workers" in P:
            self["workers"].grid(row=row, column=0, sticky=tk.EW)
            widgets.append(self["workers"])
        sw.align_labels(widgets, sticky=tk.E)
        self["scan frame"].grid(row=0, column=1, sticky=tk.N)

    def right_click(self, event):
        """Add Edit.. to the popup menu."""
        super().right_click(event)
        self.popup_menu.add_command(label="Edit..", command=self.edit)

        self.popup_menu.tk_popup(event.x_root, event.y_root, 0)
