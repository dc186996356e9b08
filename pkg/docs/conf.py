# -*- coding: utf-8 -*-
"""
Sphinx configuration of the fadeloop documentation.
"""
project = 'fadeloop'
author = 'fadeloop developers'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.doctest',
]

html_theme = 'sphinx_rtd_theme'
