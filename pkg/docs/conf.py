# Configuration file for the Sphinx documentation builder.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'tverbergkit'
copyright = '2026, tverbergkit contributors'
author = 'tverbergkit contributors'

version = '0.0.0'
release = version


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

autodoc_default_options = {'members': True}
autodoc_member_order = 'bysource'


# -- Options for HTML output -------------------------------------------------

html_theme = 'default'

# Read the Docs applies its own theme.
if os.environ.get('READTHEDOCS') != 'True':
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
