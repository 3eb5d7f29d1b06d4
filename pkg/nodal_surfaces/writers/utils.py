# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Utilities for artifact writers."""

from __future__ import absolute_import, print_function

from werkzeug.utils import secure_filename


def default_artifact_name_formatter(artifact):
    """Default generator of artifact file names.

    ``<family>-m<m>-<name>.<extension>``, leaving out the parts the artifact
    does not carry.

    >>> from nodal_surfaces.writers import Artifact
    >>> nodes = Artifact('nodes', 'csv', '', 'P_C', 9)
    >>> default_artifact_name_formatter(nodes)
    'P_C-m9-nodes.csv'
    >>> default_artifact_name_formatter(Artifact('census', 'csv', ''))
    'census.csv'
    """
    parts = []
    if artifact.family:
        parts.append(artifact.family)
    if artifact.m:
        parts.append('m{0}'.format(artifact.m))
    parts.append(artifact.name)
    return '{0}.{1}'.format('-'.join(parts), artifact.extension)


def secure_artifact_name_formatter(artifact):
    """Default name passed through ``werkzeug.utils.secure_filename``.

    For artifact names coming from user input: path separators, parent
    directory parts and non ASCII characters are stripped.
    """
    return secure_filename(default_artifact_name_formatter(artifact))
