# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'eckardt'
copyright = '2022, PgBiel'
author = 'PgBiel'

# The full version, including alpha/beta/rc tags
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc", "sphinx.ext.doctest", "sphinxcontrib.napoleon",
    "sphinx.ext.intersphinx", "sphinx.ext.mathjax",
    "autoapi.extension"
]

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'

# Doctest settings
doctest_test_doctest_blocks = "default"

# Napoleon settings
napoleon_google_docstring = True

# Intersphinx settings
intersphinx_mapping = {
    'python': ('https://docs.python.org/3.9', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}

# autoapi settings
autoapi_dirs = ["../eckardt"]
