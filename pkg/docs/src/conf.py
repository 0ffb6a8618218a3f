# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Sphinx configuration of the boolgeo documentation."""

import os
import sys

sys.path.insert(0, os.path.abspath("../../src"))

autodoc_mock_imports = [
    "nptyping",
]

autodoc_default_options = {
    "member-order": "bysource",
}

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "recommonmark",
]

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "boolgeo"
copyright = "2024 boolgeo developers"
author = "boolgeo developers"
version = "0.1.0"
release = "0.1.0"

language = "en"
exclude_patterns = []
pygments_style = "sphinx"
todo_include_todos = True

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
htmlhelp_basename = "boolgeodoc"

latex_documents = [
    (master_doc, "boolgeo.tex", "boolgeo Documentation", author, "manual"),
]

man_pages = [(master_doc, "boolgeo", "boolgeo Documentation", [author], 1)]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3.10", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}
