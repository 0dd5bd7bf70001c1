#!/usr/bin/env python3
#
# graphconj documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import datetime

from importlib.metadata import version

# -- General configuration -----------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.coverage",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
]

# The suffix of source filenames.
source_suffix = ".rst"

# The master toctree document.
master_doc = "index"

# General information about the project.
project = "graphconj"
author = "GraphConj Authors"

try:  # pragma: no cover
    version = version(project)
except Exception:  # pragma: no cover
    # we seem to have a local copy not installed without setuptools
    # so the reported version will be unknown
    version = "unknown"

release = version
this_year = datetime.date.today().year
copyright = "%s, %s" % (this_year, author)

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ["_build"]

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = "sphinx"

napoleon_preprocess_types = True

# -- Options for HTML output ---------------------------------------------------

html_theme = "alabaster"

html_sidebars = {
    "**": ["localtoc.html", "relations.html", "sourcelink.html", "searchbox.html"],
}

# Output file base name for HTML help builder.
htmlhelp_basename = "graphconjdoc"

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
    # the Lean pages print relations as unicode
    "preamble": "".join(
        (
            r"\DeclareUnicodeCharacter{2212}{-}",
            r"\DeclareUnicodeCharacter{2264}{\ensuremath{\leq}}",
            r"\DeclareUnicodeCharacter{2265}{\ensuremath{\geq}}",
            r"\DeclareUnicodeCharacter{2260}{\ensuremath{\neq}}",
        )
    )
}

latex_documents = [
    ("index", "graphconj.tex", "graphconj Documentation", author, "manual")
]

# -- Options for manual page output --------------------------------------------

man_pages = [("index", "graphconj", "graphconj Documentation", [author], 1)]

# -- Options for Epub output ---------------------------------------------------

epub_title = project
epub_author = author
epub_publisher = author
epub_copyright = copyright

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

doctest_global_setup = """
from importlib.util import find_spec
not_installed = {pkg_name: find_spec(pkg_name) is None for pkg_name in ["networkx"]}
"""
