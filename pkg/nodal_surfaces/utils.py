# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Nodal-Surfaces utility functions."""

from concurrent.futures import ThreadPoolExecutor

from flask import current_app, has_app_context
from werkzeug.utils import import_string

from . import config


def obj_or_import_string(value, default=None):
    """Import string or return object.

    :params value: Import path or class object to instantiate.
    :params default: Default object to return if the import fails.
    :returns: The imported object.
    """
    if isinstance(value, str):
        return import_string(value)
    elif value:
        return value
    return default


def get_config(key):
    """Read a ``NODAL_*`` setting.

    Inside an application context the application configuration wins,
    otherwise the module default from :py:mod:`nodal_surfaces.config` is
    returned.
    """
    if has_app_context():
        return current_app.config.get(key, getattr(config, key))
    return getattr(config, key)


def load_or_import_from_config(key, app=None, default=None):
    """Load or import value from config.

    :returns: The loaded value.
    """
    if app is None and not has_app_context():
        return obj_or_import_string(getattr(config, key, None),
                                    default=default)
    app = app or current_app
    imp = app.config.get(key)
    return obj_or_import_string(imp, default=default)


def parallel_map(func, items):
    """Map ``func`` over ``items`` keeping the input order.

    Uses ``NODAL_THREADS`` workers when it is larger than one.
    """
    items = list(items)
    threads = get_config('NODAL_THREADS')
    if not threads or threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def scaled_tolerance(tol, *values):
    """Absolute tolerance ``tol * (1 + max |value|)``."""
    return tol * (1.0 + max([abs(v) for v in values] or [0.0]))


def require_multiple_of_three(m, **extra):
    """Raise a domain error unless ``m = 3q`` with ``q >= 1``."""
    from .errors import DomainError
    if int(m) != m or m < 3 or m % 3:
        params = dict(m=m)
        params.update(extra)
        raise DomainError(params)
    if m > get_config('NODAL_MAX_DEGREE'):
        params = dict(m=m, max_degree=get_config('NODAL_MAX_DEGREE'))
        params.update(extra)
        raise DomainError(params)
