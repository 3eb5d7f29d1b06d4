# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

from __future__ import print_function

import os

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ['image.nonlocal_uri']

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
    'sphinx_click',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Nodal-Surfaces'
copyright = u'2026, Nodal-Surfaces contributors'
author = u'Nodal-Surfaces contributors'

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join(os.path.dirname(__file__), '..', 'nodal_surfaces',
                       'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

# The full version, including alpha/beta/rc tags.
release = version

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_theme_options = {
    'description': 'Real algebraic surfaces with many nodes.',
    'github_button': False,
    'github_banner': False,
    'show_powered_by': False,
}

html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}

htmlhelp_basename = 'nodal-surfaces_namedoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'nodal-surfaces.tex', u'Nodal-Surfaces Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'nodal-surfaces', u'Nodal-Surfaces Documentation',
     [author], 1)
]

# Example configuration for intersphinx: refer to the Python standard library.
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'flask': ('https://flask.palletsprojects.com/en/latest/', None),
}

# Autodoc configuraton.
autoclass_content = 'both'
