# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest helpers."""

from __future__ import absolute_import, print_function

import numpy as np


def get_file(filepath, result):
    """Get a file information dict by its filepath from the results list."""
    return next((f for f in result if f['filepath'] == filepath), None)


def on_level(value, level, tol=1e-6):
    """Tell if a critical value sits on a level."""
    return abs(value - level) <= tol * (1.0 + abs(level))


def binomial2(n):
    """``C(n, 2)``."""
    return n * (n - 1) // 2


def random_points(seed, n=100, low=-1.0, high=1.0):
    """Reproducible ``(xs, ys)`` sample."""
    rng = np.random.RandomState(seed)
    return rng.uniform(low, high, (2, n))
