# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""JSON and CSV serialization of polynomials, arrangements and reports.

JSON documents are validated against the schemas named in the
``NODAL_*_JSONSCHEMA`` settings, both when dumped and when loaded, and are
written with sorted keys so that identical inputs give identical bytes.
Floats use the shortest decimal form that reads back to the same double,
never more than 17 significant digits.
"""

from __future__ import absolute_import, print_function

import csv
import io
import json

from jsonschema import validate

from .arrangements import Arrangement
from .jsonschemas import get_schema
from .polynomials import BivarPoly, UnivarPoly
from .utils import get_config

FLOAT_FORMAT = '{0:.17g}'

VERTEX_HEADER = ['x', 'y', 'count']
TRIANGLE_HEADER = ['i', 'j', 'k', 'bx', 'by']
CRITICAL_POINT_HEADER = ['x', 'y', 'value', 'morse', 'grad_norm',
                         'hessian_det']
NODE_HEADER = ['x', 'y', 'z', 'class', 'grad_norm', 'hessian3_det',
               'sig_plus', 'sig_minus']
PROTOTILE_HEADER = ['shape', 'kind', 'a', 'b', 'c', 'faces']
EXTREMA_HEADER = ['z', 'value', 'kind']


def validate_document(data, schema_key):
    """Validate ``data`` against the schema configured under ``schema_key``.

    :raises jsonschema.ValidationError: if the document does not conform.
    """
    validate(data, get_schema(get_config(schema_key)))
    return data


def dumps_document(data, schema_key):
    """Validate and encode a document."""
    validate_document(data, schema_key)
    return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + '\n'


def loads_document(text, schema_key):
    """Decode and validate a document."""
    return validate_document(json.loads(text), schema_key)


def polynomial_to_json(poly, prune=None):
    """Polynomial document of a :py:class:`BivarPoly` or
    :py:class:`UnivarPoly`."""
    return dumps_document(poly.to_dict(prune), 'NODAL_POLYNOMIAL_JSONSCHEMA')


def polynomial_from_json(text):
    """Read back a polynomial; ``vars == ['z']`` gives a univariate one."""
    data = loads_document(text, 'NODAL_POLYNOMIAL_JSONSCHEMA')
    if data['vars'] == ['z']:
        return UnivarPoly.from_dict(data)
    return BivarPoly.from_dict(data)


def arrangement_to_json(arr):
    """Arrangement document."""
    return dumps_document(arr.to_dict(), 'NODAL_ARRANGEMENT_JSONSCHEMA')


def arrangement_from_json(text):
    """Read back an :py:class:`~nodal_surfaces.arrangements.Arrangement`."""
    return Arrangement.from_dict(
        loads_document(text, 'NODAL_ARRANGEMENT_JSONSCHEMA'))


def spectrum_to_json(spectrum):
    """Spectrum summary document."""
    return dumps_document(spectrum.to_dict(), 'NODAL_SPECTRUM_JSONSCHEMA')


def node_report_to_json(report):
    """Node count report document."""
    return dumps_document(report.to_dict(), 'NODAL_NODE_REPORT_JSONSCHEMA')


def _cell(value):
    if isinstance(value, float):
        return FLOAT_FORMAT.format(value)
    return value


def rows_to_csv(header, rows):
    """CSV text with floats at 17 significant digits."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return out.getvalue()


def vertices_to_csv(report):
    """``x, y, count`` per clustered vertex."""
    return rows_to_csv(VERTEX_HEADER,
                       ([float(x), float(y), int(n)]
                        for x, y, n in report.points))


def triangles_to_csv(triangles):
    """``i, j, k, bx, by`` per bounded triangle, 1-based line labels."""
    return rows_to_csv(TRIANGLE_HEADER,
                       ([i + 1, j + 1, k + 1, float(bx), float(by)]
                        for (i, j, k), (bx, by) in triangles))


def critical_points_to_csv(points):
    """One row per critical point."""
    return rows_to_csv(CRITICAL_POINT_HEADER,
                       ([float(v) if not isinstance(v, str) else v
                         for v in cp.to_row()] for cp in points))


def nodes_to_csv(nodes):
    """One row per certified node."""
    return rows_to_csv(NODE_HEADER, (node.to_row() for node in nodes))


def prototiles_to_csv(tiles):
    """Sorted side lengths, kind and face count per triangle shape."""
    return rows_to_csv(PROTOTILE_HEADER,
                       ([n, tile.kind] + list(tile.sides) +
                        [len(tile.members)]
                        for n, tile in enumerate(tiles, 1)))


def extrema_to_csv(points):
    """``z, value, kind`` per critical point of a univariate polynomial."""
    return rows_to_csv(EXTREMA_HEADER, ([float(z), float(v), kind]
                                        for z, v, kind in points))
