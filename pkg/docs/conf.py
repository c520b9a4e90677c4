#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# citation_fit_step documentation build configuration file.

import sys
import os

# Document the working copy rather than an installed version.
cwd = os.getcwd()
project_root = os.path.dirname(cwd)
sys.path.insert(0, project_root)

import citation_fit_step  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.githubpages",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx_design",
    "sphinx_copybutton",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "SEAMM Citation Fit Plug-in"
copyright = "2024, Molecular Sciences Software Institute (MolSSI)"

version = citation_fit_step.__version__
release = citation_fit_step.__version__

exclude_patterns = ["_build"]
pygments_style = "default"

# Numpy-style docstrings throughout
napoleon_google_docstring = False
napoleon_numpy_docstring = True

# -- Options for HTML output -------------------------------------------

html_theme = "pydata_sphinx_theme"
html_theme_options = {
    "show_toc_level": 2,
    "header_links_before_dropdown": 4,
    "external_links": [
        {"name": "SEAMM Documentation", "url": "https://molssi-seamm.github.io"},
        {"name": "MolSSI", "url": "https://molssi.org"},
    ],
    "secondary_sidebar_items": ["page-toc", "sourcelink"],
}
html_static_path = ["_static"]
html_show_sphinx = False
html_show_copyright = False
htmlhelp_basename = "citation_fit_stepdoc"

man_pages = [
    ("index", "citation_fit_step", "Citation Fit Step Documentation", ["Paul Saxe"], 1)
]
