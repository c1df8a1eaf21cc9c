# -*- coding: utf-8 -*-
#
# curlhvi documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc', 'sphinx.ext.autosummary',
    'sphinx.ext.doctest', 'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
]

templates_path = ['templates']
autosummary_generate = True
source_suffix = '.rst'
master_doc = 'index'

project = 'curlhvi'
copyright = 'the curlhvi contributors'
authors = 'the curlhvi contributors'

import curlhvi
version = curlhvi.short_version
release = curlhvi.__version__

exclude_patterns = ['_build', 'templates', 'include', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
add_function_parentheses = False
todo_include_todos = False

html_theme = 'alabaster'
html_short_title = 'curlhvi'
htmlhelp_basename = 'curlhvidoc'

latex_documents = [
    (master_doc, 'curlhvi.tex', 'curlhvi Documentation', authors, 'manual'),
]
man_pages = [
    (master_doc, 'curlhvi', 'curlhvi Documentation', [authors], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/{.major}'.format(
        sys.version_info), None),
    'numpy': ('https://docs.scipy.org/doc/numpy/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/reference/', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable/', None),
}
