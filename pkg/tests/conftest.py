# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.


"""Pytest configuration."""

from __future__ import absolute_import, print_function

import shutil
import tempfile

import pytest
from click.testing import CliRunner
from flask import Flask

from nodal_surfaces import NodalSurfaces
from nodal_surfaces.polynomials import build_Jbar, folding_F, normalized_JC


@pytest.fixture(scope='session')
def instance_path():
    """Default instance path."""
    path = tempfile.mkdtemp()

    yield path

    shutil.rmtree(path)


@pytest.fixture()
def base_app(instance_path):
    """Flask application fixture."""
    app = Flask('testapp', instance_path=instance_path)
    app.config.update(
        TESTING=True,
        NODAL_THREADS=None,
    )
    NodalSurfaces(app)
    return app


@pytest.fixture()
def app(base_app):
    """Flask application fixture inside an application context."""
    with base_app.app_context():
        yield base_app


@pytest.fixture()
def out_dir():
    """Empty directory receiving written artifacts."""
    path = tempfile.mkdtemp()

    yield path

    shutil.rmtree(path)


@pytest.fixture()
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture(scope='session')
def jc6():
    """``J_6^C``."""
    return normalized_JC(6)


@pytest.fixture(scope='session')
def jc9():
    """``J_9^C``."""
    return normalized_JC(9)


@pytest.fixture(scope='session')
def jbar9():
    """``Jbar_9^C``."""
    return build_Jbar(9)


@pytest.fixture(scope='session')
def folding6():
    """Folding polynomial of degree 6."""
    return folding_F(6)
