# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Real algebraic surfaces with many nodes."""

from __future__ import absolute_import, print_function

from flask import Flask
from werkzeug.utils import cached_property

from . import config
from .utils import load_or_import_from_config


class _NodalSurfacesState(object):
    """Nodal-Surfaces state."""

    def __init__(self, app):
        """Initialize state."""
        self.app = app

    @cached_property
    def bundle_writer(self):
        """Load the writer class used for export bundles."""
        return load_or_import_from_config(
            'NODAL_BUNDLE_WRITER', app=self.app
        )

    @cached_property
    def artifact_name_formatter(self):
        """Load the function naming bundle files."""
        return load_or_import_from_config(
            'NODAL_ARTIFACT_NAME_FORMATTER', app=self.app
        )


class NodalSurfaces(object):
    """Nodal-Surfaces extension."""

    def __init__(self, app=None):
        """Extension initialization."""
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Flask application initialization."""
        self.init_config(app)
        app.extensions['nodal-surfaces'] = _NodalSurfacesState(app)

    def init_config(self, app):
        """Initialize configuration."""
        for k in dir(config):
            if k.startswith('NODAL_'):
                app.config.setdefault(k, getattr(config, k))


def create_app(**config_overrides):
    """Create a minimal application carrying the extension.

    Used by the command line; keyword arguments update the configuration.
    """
    app = Flask('nodal_surfaces')
    app.config.update(config_overrides)
    NodalSurfaces(app)
    return app
