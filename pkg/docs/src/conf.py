"""
Sphinx configuration of the cyclosc documentation.

The API pages are generated with sphinx-automodapi from the sources in
src/; numba is mocked so that the documentation builds without a JIT
compiler.
"""
import os
import sys
from unittest import mock

sys.path.insert(0, os.path.abspath("../.."))
sys.path.insert(0, os.path.abspath("../../src"))

# the integrator kernel is decorated with numba.njit at import time
MOCK_MODULES = ["numba"]
for mod_name in MOCK_MODULES:
    sys.modules[mod_name] = mock.Mock()

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_automodapi.automodapi",
    "sphinx_automodapi.smart_resolver",
    "sphinx_rtd_theme",
]

autodoc_mock_imports = ["pytest"]
autodoc_member_order = "bysource"
autodoc_typehints = "none"
automodsumm_inherited_members = False

source_suffix = [".rst"]
master_doc = "index"

project = "cyclosc"
copyright = "2026, cyclosc developers"  # pylint: disable=redefined-builtin
author = "cyclosc developers"

version = "0.1.0"
release = "0.1.0"

language = "en"
exclude_patterns = ["_build"]
pygments_style = "sphinx"

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_show_sourcelink = False
htmlhelp_basename = "cyclosc-doc"

# -- Cross references -----------------------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
    "xarray": ("https://docs.xarray.dev/en/stable/", None),
}
