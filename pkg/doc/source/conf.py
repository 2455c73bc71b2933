# !/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# roadgen documentation build configuration file.

import sys
import os

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath('../..'))

# on_rtd is whether we are on readthedocs.org
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'roadgen'
copyright = '2020, the roadgen developers'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0'

exclude_patterns = []
default_role = 'py:obj'
pygments_style = 'sphinx'

htmlhelp_basename = 'roadgendoc'

latex_documents = [
    ('index', 'roadgen.tex', 'roadgen Documentation',
     'the roadgen developers', 'manual'),
]

man_pages = [
    ('index', 'roadgen', 'roadgen Documentation',
     ['the roadgen developers'], 1)
]
