#!/usr/bin/env python3

# Sphinx configuration of the kerdocklab documentation.

import sys
import os
import pathlib

sys.path.insert(0, os.path.abspath("../"))

autodoc_default_options = {
    "special-members": "__init__",
    "undoc-members": True,
    "show-inheritance": True,
}
autodoc_inherit_docstrings = False
autoclass_content = "class"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
}

source_suffix = ".rst"
master_doc = "index"

project = "kerdocklab"
copyright = "2026, the kerdocklab developers"
author = "the kerdocklab developers"

this_dir = pathlib.Path(__file__).resolve().parent
with (this_dir / ".." / "kerdocklab" / "version.txt").open() as vf:
    version = vf.read().strip()
release = version

exclude_patterns = ["_build"]
pygments_style = "sphinx"

try:
    import importlib

    theme = importlib.import_module("sphinx_rtd_theme")
    html_theme = "sphinx_rtd_theme"
    html_theme_path = [theme.get_html_theme_path()]
except ImportError:
    html_theme = "default"

htmlhelp_basename = "kerdocklabDoc"
