# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information

import datetime

project = 'phasefold'
author = 'The phasefold Authors'
copyright = f'{datetime.datetime.now().year}, {author}'

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

source_suffix = ['.rst', '.md']

extensions = [
  'sphinx.ext.autodoc',
  'sphinx.ext.autosummary',
  'sphinx.ext.intersphinx',
  'sphinx.ext.mathjax',
  'sphinx.ext.napoleon',
  'sphinx.ext.viewcode',
  'myst_parser',
]

add_module_names = False
autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
# API pages build without torch installed.
autodoc_mock_imports = ['torch']

# Docstrings use ``Args:`` sections.
napoleon_google_docstring = True
napoleon_numpy_docstring = False

intersphinx_mapping = {
  'python': ('https://docs.python.org/3', None),
  'numpy': ('https://numpy.org/doc/stable', None),
  'torch': ('https://pytorch.org/docs/stable', None),
  'click': ('https://click.palletsprojects.com/en/stable', None),
}

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_theme = 'sphinx_rtd_theme'
html_title = 'phasefold: randomized phase folding for Clifford+T circuits'
html_theme_options = {
  'navigation_depth': 3,
  'collapse_navigation': False,
}

pygments_style = 'sphinx'
