# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Errors for nodal surface constructions."""

from __future__ import absolute_import, print_function


class NodalError(Exception):
    """Base class for Nodal-Surfaces errors."""


class DomainError(NodalError, ValueError):
    """Parameters outside the range where a construction is defined."""

    def __init__(self, params, *args, **kwargs):
        """Initialize exception.

        :param params: dict with the offending parameters, e.g.
            ``{'X': 'C', 'nu': 9, 'd': 18}``.
        """
        self.params = params
        if not args:
            args = ('Unsupported parameters: {0}'.format(
                ', '.join('{0}={1}'.format(k, v)
                          for k, v in sorted(params.items()))),)
        super(DomainError, self).__init__(*args, **kwargs)


class DegenerateArrangementError(NodalError):
    """Two lines of an arrangement coincide."""

    def __init__(self, lines, *args, **kwargs):
        """Initialize exception."""
        self.lines = lines
        super(DegenerateArrangementError, self).__init__(*args, **kwargs)


class NonSimpleArrangementError(NodalError):
    """Operation requires every vertex to be ordinary."""


class IncidenceError(NodalError):
    """A clustered vertex lies on fewer than two lines."""

    def __init__(self, point, count, *args, **kwargs):
        """Initialize exception."""
        self.point = point
        self.count = count
        if not args:
            args = ('Vertex {0} lies on {1} line(s)'.format(point, count),)
        super(IncidenceError, self).__init__(*args, **kwargs)


class ConcurrenceMismatchError(NodalError):
    """Detected triple points disagree with the expected census."""

    def __init__(self, expected, found, *args, **kwargs):
        """Initialize exception."""
        self.expected = expected
        self.found = found
        if not args:
            args = ('Expected {0} triple points, found {1}'.format(
                expected, found),)
        super(ConcurrenceMismatchError, self).__init__(*args, **kwargs)


class ConvergenceError(NodalError):
    """Newton iteration did not converge."""

    def __init__(self, last, *args, **kwargs):
        """Initialize exception.

        :param last: last iterate ``(x, y)``.
        """
        self.last = last
        super(ConvergenceError, self).__init__(*args, **kwargs)


class DegeneratePointError(NodalError):
    """Hessian is singular at a critical point."""

    def __init__(self, point, *args, **kwargs):
        """Initialize exception."""
        self.point = point
        super(DegeneratePointError, self).__init__(*args, **kwargs)


class SpectrumViolationError(NodalError):
    """A critical value, or a level count, breaks the expected spectrum."""

    def __init__(self, point, value, *args, **kwargs):
        """Initialize exception."""
        self.point = point
        self.value = value
        super(SpectrumViolationError, self).__init__(*args, **kwargs)


class SpectrumUnavailableError(NodalError):
    """No critical spectrum can be computed for the given degree."""


class CertificationError(NodalError):
    """A node failed gradient, Hessian or signature certification."""

    def __init__(self, point, reason, *args, **kwargs):
        """Initialize exception."""
        self.point = point
        self.reason = reason
        if not args:
            args = ('Node at {0} not certified: {1}'.format(point, reason),)
        super(CertificationError, self).__init__(*args, **kwargs)


class EmptyMeshWarning(UserWarning):
    """The zero set does not meet the meshing window."""
