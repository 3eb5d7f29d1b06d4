# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""JSON Schemas of the exported documents.

Schemas are addressed by their path relative to this package, e.g.
``nodal/polynomial-v1.0.0.json``.
"""

from __future__ import absolute_import, print_function

import json
import os
from functools import lru_cache

SCHEMAS_DIR = os.path.dirname(os.path.abspath(__file__))


@lru_cache(maxsize=None)
def get_schema(path):
    """Load a schema by its relative path.

    :raises FileNotFoundError: for an unknown schema.
    """
    with open(os.path.join(SCHEMAS_DIR, *path.split('/'))) as fp:
        return json.load(fp)
