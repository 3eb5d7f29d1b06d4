# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests for the utility functions."""

from __future__ import absolute_import, print_function

import pytest

from nodal_surfaces.errors import DomainError
from nodal_surfaces.utils import get_config, load_or_import_from_config, \
    obj_or_import_string, parallel_map, require_multiple_of_three, \
    scaled_tolerance
from nodal_surfaces.writers import Artifact, BundleWriter
from nodal_surfaces.writers.utils import default_artifact_name_formatter
from nodal_surfaces.writers.utils import \
    secure_artifact_name_formatter as fmt


def test_obj_or_import_string():
    """Test import strings and plain objects."""
    assert obj_or_import_string('nodal_surfaces.writers.BundleWriter') is \
        BundleWriter
    assert obj_or_import_string(BundleWriter) is BundleWriter
    assert obj_or_import_string(None, default=len) is len


def test_get_config(base_app):
    """The application configuration wins inside a context."""
    assert get_config('NODAL_ORACLE_GRID') == 256
    base_app.config['NODAL_ORACLE_GRID'] = 128
    with base_app.app_context():
        assert get_config('NODAL_ORACLE_GRID') == 128
    assert get_config('NODAL_ORACLE_GRID') == 256


def test_load_or_import_from_config(base_app):
    """Import settings resolve with and without application."""
    assert load_or_import_from_config('NODAL_BUNDLE_WRITER') is BundleWriter
    base_app.config['NODAL_ARTIFACT_NAME_FORMATTER'] = fmt
    assert load_or_import_from_config(
        'NODAL_ARTIFACT_NAME_FORMATTER', app=base_app) is fmt


def test_parallel_map(base_app):
    """Order is kept with and without worker threads."""
    items = list(range(50))
    assert parallel_map(lambda x: x * x, items) == [x * x for x in items]
    base_app.config['NODAL_THREADS'] = 4
    with base_app.app_context():
        assert parallel_map(lambda x: x * x, items) == \
            [x * x for x in items]


def test_scaled_tolerance():
    """Absolute tolerance grows with the magnitudes."""
    assert scaled_tolerance(1e-9) == 1e-9
    assert scaled_tolerance(1e-9, 3.0, -5.0) == pytest.approx(6e-9)


@pytest.mark.parametrize('m', [6, 9, 12, 18])
def test_require_multiple_of_three(m):
    """Multiples of three up to the largest degree are accepted."""
    require_multiple_of_three(m)


@pytest.mark.parametrize('m', [0, 4, 5, 21, 6.5])
def test_require_multiple_of_three_rejects(m):
    """Other degrees are domain errors carrying the parameters."""
    with pytest.raises(DomainError) as excinfo:
        require_multiple_of_three(m, family='P_C')
    assert excinfo.value.params['m'] == m
    assert excinfo.value.params['family'] == 'P_C'


def test_default_artifact_name_formatter():
    """Family and degree prefix the artifact name."""
    assert default_artifact_name_formatter(
        Artifact('spectrum', 'json', '', 'J_C', 6)) == 'J_C-m6-spectrum.json'
    assert default_artifact_name_formatter(
        Artifact('census', 'csv', '')) == 'census.csv'


def test_secure_artifact_name_formatter():
    """Test some potentially dangerous or incompatible artifact names."""
    examples = [
        ('../../foobar', 'foobar.txt'),
        ('/etc/shadow', 'etc_shadow.txt'),
        ('łóżźćęą', 'ozzcea.txt'),
        ('Name with spaces', 'Name_with_spaces.txt'),
    ]
    for orig, secure in examples:
        assert fmt(Artifact(orig, 'txt', '')) == secure
