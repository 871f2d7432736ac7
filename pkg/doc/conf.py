# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

from recommonmark.parser import CommonMarkParser
from pkg_resources import get_distribution
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- Project information -----------------------------------------------------

project = "mincq"
copyright = "2024, The mincq developers"
author = "The mincq developers"

# The full version, including alpha/beta/rc tags
release = get_distribution("mincq").version
# The short X.Y version
version = ".".join(release.split(".")[:2])

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "autoapi.extension",
    "sphinx.ext.doctest",
    "sphinx.ext.todo",
    "sphinx_math_dollar",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "recommonmark",
]


def setup(app):
    app.add_config_value(
        "recommonmark_config",
        {
            "enable_auto_doc_ref": True,
            "enable_math": True,
            "enable_inline_math": True,
            "enable_eval_rst": True,
        },
        True,
    )


source_parsers = {".md": CommonMarkParser}

autoapi_type = "python"
autoapi_dirs = ["../mincq"]

templates_path = ["_templates"]

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

master_doc = "index"
language = None
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = []
htmlhelp_basename = "mincqdoc"

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, "mincq.tex", "mincq documentation", author, "manual"),
]

man_pages = [(master_doc, "mincq", "mincq documentation", [author], 1)]

# -- Options for todo extension ----------------------------------------------

todo_include_todos = True
