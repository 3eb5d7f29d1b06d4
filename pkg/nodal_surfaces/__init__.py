# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Real algebraic surfaces with many nodes.

The package builds the simple line arrangements of types (C) and (D), the
polynomials vanishing on them, and the separable surfaces
``J(x, y) + g(z) = 0`` whose real nodes are pairs of critical points with
opposite critical values.

>>> from nodal_surfaces.surfaces import build_surface, enumerate_nodes
>>> nodes, report = enumerate_nodes(build_surface('P_C', 9))
>>> report.enumerated, report.formula
(220, 220)

Every ``NODAL_*`` setting of :py:mod:`nodal_surfaces.config` can be
overridden through a Flask application:

.. code-block:: python

    from flask import Flask
    from nodal_surfaces import NodalSurfaces

    app = Flask('myapp')
    app.config['NODAL_PRECISION'] = 'compensated'
    NodalSurfaces(app)

The ``nodal-surfaces`` command line exposes the same operations.
"""

from __future__ import absolute_import, print_function

from .ext import NodalSurfaces
from .proxies import current_nodal
from .version import __version__

__all__ = ('__version__', 'current_nodal', 'NodalSurfaces')
