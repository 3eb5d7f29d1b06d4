# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Signals for the module."""

from blinker import Namespace

_signals = Namespace()

critical_point_polished = _signals.signal('critical_point_polished')
"""Signal sent each time Newton polishing converged.

Send the :py:class:`nodal_surfaces.critical.CriticalPoint` as the sender.

Example subscriber

.. code-block:: python

    def listener(sender, *args, **kwargs):
        print(sender.location, sender.value, sender.morse)

    from nodal_surfaces.signals import critical_point_polished
    critical_point_polished.connect(listener)
"""

node_certified = _signals.signal('node_certified')
"""Signal sent for every certified node.

Send the :py:class:`nodal_surfaces.surfaces.Node` as the sender.
"""

verification_checked = _signals.signal('verification_checked')
"""Signal sent after each check of the regression suite.

Sends a dict with the following information inside:
- name: the check name
- degree: the degree ``m`` under test
- passed: boolean outcome
- detail: short human readable detail
- errata: list of erratum records (may be empty)
"""

bundle_writer_status = _signals.signal('bundle_writer_status')
"""Signal sent while an export bundle is written.

Sends a dict with the following information inside:
- total_files: the total number of files to write
- total_size: the total size to write
- written_files: the number of written files
- written_size: the size written
- current_filename: the name of the last written file
- current_filesize: the size of the last written file
"""
