# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Writers for artifacts.

A writer is a controller that stores polynomials, reports, images and meshes
on disk according to a specific layout. Nodal-Surfaces comes with a bundle
writer that adds md5 manifests and a tag file to the artifacts.

New layouts can be implemented by subclassing
:py:class:`~.base_writer.BaseWriter`.
"""

from __future__ import absolute_import, print_function

from .base_writer import Artifact, BaseWriter
from .bundle_writer import BundleWriter

__all__ = ('Artifact', 'BaseWriter', 'BundleWriter')
