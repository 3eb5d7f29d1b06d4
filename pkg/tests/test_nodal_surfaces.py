# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests."""

from __future__ import absolute_import, print_function

from flask import Flask

from nodal_surfaces import NodalSurfaces, current_nodal
from nodal_surfaces.ext import create_app
from nodal_surfaces.utils import get_config
from nodal_surfaces.writers import BundleWriter
from nodal_surfaces.writers.utils import default_artifact_name_formatter


def test_version():
    """Test version import."""
    from nodal_surfaces import __version__
    assert __version__


def test_init():
    """Test extension initialization."""
    app = Flask('testapp')
    ext = NodalSurfaces(app)
    assert 'nodal-surfaces' in app.extensions

    app = Flask('testapp')
    ext = NodalSurfaces()
    assert 'nodal-surfaces' not in app.extensions
    ext.init_app(app)
    assert 'nodal-surfaces' in app.extensions


def test_init_config_keeps_overrides():
    """Defaults do not overwrite values set before initialization."""
    app = Flask('testapp')
    app.config['NODAL_PRECISION'] = 'compensated'
    NodalSurfaces(app)
    assert app.config['NODAL_PRECISION'] == 'compensated'
    assert app.config['NODAL_MAX_DEGREE'] == 18
    assert app.config['NODAL_BISECTION_STEPS'] == 32


def test_state(app):
    """Test the state object behind the proxy."""
    assert current_nodal.bundle_writer is BundleWriter
    assert current_nodal.artifact_name_formatter is \
        default_artifact_name_formatter


def test_create_app():
    """Keyword arguments update the configuration."""
    app = create_app(NODAL_VERTEX_TOLERANCE=1e-8)
    assert app.config['NODAL_VERTEX_TOLERANCE'] == 1e-8
    assert app.config['NODAL_CLIP_FACTOR'] == 1.15
    with app.app_context():
        assert get_config('NODAL_VERTEX_TOLERANCE') == 1e-8
