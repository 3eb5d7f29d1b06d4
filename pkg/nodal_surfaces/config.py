# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Default configuration of Nodal-Surfaces module."""

NODAL_MAX_DEGREE = 18
"""Largest degree ``m`` accepted by the surface constructions."""

NODAL_VERTEX_TOLERANCE = 1e-9
"""Scale-aware clustering radius for vertices and triple points.

Two intersection points ``p`` and ``q`` are merged when
``|p - q| <= tol * (1 + |p|)``.
"""

NODAL_LINE_TOLERANCE = 1e-10
"""Tolerance on normalized ``(a, b, c)`` under which two lines coincide."""

NODAL_COEFFICIENT_RTOL = 1e-6
"""Relative tolerance for coefficientwise polynomial comparisons."""

NODAL_PRUNE_THRESHOLD = 1e-9
"""Coefficients below this fraction of the largest one are dropped on export.

Never applied to in-memory polynomials.
"""

NODAL_PRECISION = 'double'
"""Accumulation mode for products of linear factors.

``'double'`` multiplies in plain double precision, ``'compensated'`` carries
a double-double (error-free two-product) accumulator.
"""

NODAL_NEWTON_MAX_ITER = 50
"""Maximum number of Newton iterations when polishing a critical point."""

NODAL_NEWTON_GRAD_RTOL = 1e-11
"""Newton stops when ``|grad p| < rtol * scale`` at the iterate."""

NODAL_CERTIFY_RTOL = 1e-8
"""Scale-aware tolerance for gradient and Hessian certification."""

NODAL_LEVEL_TOLERANCE = 1e-5
"""Tolerance for matching critical values against levels and value sums."""

NODAL_DEDUPE_TOLERANCE = 1e-7
"""Distance under which two polished critical points are the same point."""

NODAL_MATCH_TOLERANCE = 1e-6
"""Distance used when matching two critical point sets."""

NODAL_ORACLE_GRID = 256
"""Default grid size of the brute-force critical point oracle."""

NODAL_THREADS = None
"""Worker threads for batch polishing; ``None`` or ``1`` runs serially."""

NODAL_RENDER_SIZE = 256
"""Default image width and height in pixels."""

NODAL_RENDER_SAMPLES = 192
"""Default number of ray samples inside the clip sphere."""

NODAL_BISECTION_STEPS = 32
"""Bisection steps refining a sign change along a ray."""

NODAL_CLIP_FACTOR = 1.15
"""Clip sphere radius as a multiple of the largest vertex radius."""

NODAL_MESH_RESOLUTION = 64
"""Default marching cubes grid resolution per axis."""

NODAL_MESH_MAX_RESOLUTION = 256
"""Largest accepted marching cubes grid resolution per axis."""

NODAL_POLYNOMIAL_JSONSCHEMA = 'nodal/polynomial-v1.0.0.json'
"""JSON schema of exported polynomials."""

NODAL_ARRANGEMENT_JSONSCHEMA = 'nodal/arrangement-v1.0.0.json'
"""JSON schema of exported arrangements."""

NODAL_SPECTRUM_JSONSCHEMA = 'nodal/spectrum-v1.0.0.json'
"""JSON schema of critical spectrum summaries."""

NODAL_NODE_REPORT_JSONSCHEMA = 'nodal/node-report-v1.0.0.json'
"""JSON schema of node count reports."""

NODAL_BUNDLE_JSONSCHEMA = 'nodal/bundle-v1.0.0.json'
"""JSON schema of the file information of export bundles."""

NODAL_BUNDLE_WRITER = 'nodal_surfaces.writers.BundleWriter'
"""Writer class used by the command line to store artifacts."""

NODAL_ARTIFACT_NAME_FORMATTER = \
    'nodal_surfaces.writers.utils.default_artifact_name_formatter'
"""Filename formatter for written artifacts."""

NODAL_BUNDLE_TAGS = [
    ('Bundle-Software', None),  # Autogenerated
    ('Payload-Oxum', None),  # Autogenerated
    ('External-Identifier', None),  # Autogenerated
    ('External-Description', 'Nodal surface artifacts.'),
]
"""Default list of tags that will be written to ``bundle-info.txt``."""
