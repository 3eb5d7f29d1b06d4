# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Line systems (C) and (D) and their simple subarrangements.

Every line is stored in the unscaled factor form in which it enters the
polynomial products, ``y - x t - gamma``, ``x - c`` or ``y - c``. The
normalized ``(a, b, c)`` view, ``a x + b y = c`` with ``a^2 + b^2 = 1``, is
only used by the geometric predicates (intersections, incidences,
triangle tests).
"""

from __future__ import absolute_import, print_function

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DegenerateArrangementError, DomainError, \
    IncidenceError, NonSimpleArrangementError
from .utils import get_config

NONVERTICAL = 'nonvertical'
VERTICAL_X = 'vertical_x'
HORIZONTAL_Y = 'horizontal_y'

SYSTEMS = ('C', 'D', 'Sigma_C', 'Sigma_D', 'C_odd', 'D_even', 'M_minus1',
           'M_8', 'Lbar', 'Custom')
"""Known arrangement tags."""


@dataclass(frozen=True)
class LineForm(object):
    """One affine factor of an arrangement product.

    ``offset`` is the term ``gamma`` of a non-vertical factor
    ``y - x t - gamma`` and the constant ``c`` of ``x - c`` or ``y - c``.
    The label ``(system, nu, d)`` records where the line comes from.
    """

    kind: str
    t: float = 0.0
    offset: float = 0.0
    system: str = 'Custom'
    nu: int = 0
    d: int = 0

    @classmethod
    def nonvertical(cls, t, gamma, system='Custom', nu=0, d=0):
        """Line ``y - x t - gamma = 0``."""
        return cls(NONVERTICAL, float(t), float(gamma), system, nu, d)

    @classmethod
    def vertical(cls, c, system='Custom', nu=0, d=0):
        """Line ``x - c = 0``."""
        return cls(VERTICAL_X, 0.0, float(c), system, nu, d)

    @classmethod
    def horizontal(cls, c, system='Custom', nu=0, d=0):
        """Line ``y - c = 0``."""
        return cls(HORIZONTAL_Y, 0.0, float(c), system, nu, d)

    @classmethod
    def from_normal(cls, a, b, c, system='Custom', nu=0, d=0, tol=1e-12):
        """Build the factor form of the line ``a x + b y = c``."""
        if abs(b) <= tol * max(abs(a), abs(b)):
            return cls.vertical(c / a, system, nu, d)
        if abs(a) <= tol * max(abs(a), abs(b)):
            return cls.horizontal(c / b, system, nu, d)
        return cls.nonvertical(-a / b, c / b, system, nu, d)

    @property
    def label(self):
        """Label ``(system, nu, d)``."""
        return (self.system, self.nu, self.d)

    def linear_coefficients(self):
        """Return ``(ax, ay, a0)`` with the factor ``ax x + ay y + a0``."""
        if self.kind == NONVERTICAL:
            return (-self.t, 1.0, -self.offset)
        elif self.kind == VERTICAL_X:
            return (1.0, 0.0, -self.offset)
        return (0.0, 1.0, -self.offset)

    def __call__(self, x, y):
        """Evaluate the unscaled factor; accepts scalars or arrays."""
        ax, ay, a0 = self.linear_coefficients()
        if self.kind == NONVERTICAL:
            return y - x * self.t - self.offset
        return ax * x + ay * y + a0

    def normalized(self):
        """Return ``(a, b, c)`` of ``a x + b y = c`` with unit normal.

        The sign is fixed so that the first nonzero of ``(a, b)`` is
        positive.
        """
        ax, ay, a0 = self.linear_coefficients()
        norm = math.hypot(ax, ay)
        a, b, c = ax / norm, ay / norm, -a0 / norm
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return (a, b, c)

    def same_line(self, other, tol=None):
        """Tell if two forms describe the same line."""
        tol = get_config('NODAL_LINE_TOLERANCE') if tol is None else tol
        n1 = np.array(self.normalized())
        n2 = np.array(other.normalized())
        return bool(np.all(np.abs(n1 - n2) <= tol) or
                    np.all(np.abs(n1 + n2) <= tol))

    def compose(self, u, v):
        """Substitute linear forms for ``x`` and ``y``.

        :param u: ``(ux, uy, u0)`` so that ``x = ux X + uy Y + u0``.
        :param v: ``(vx, vy, v0)`` so that ``y = vx X + vy Y + v0``.
        :returns: ``(ax, ay, a0)`` of the factor in the new variables.
        """
        ax, ay, a0 = self.linear_coefficients()
        return (ax * u[0] + ay * v[0],
                ax * u[1] + ay * v[1],
                ax * u[2] + ay * v[2] + a0)

    def rotated(self, angle, center=(0.0, 0.0)):
        """Rotate the line counterclockwise by ``angle`` about ``center``."""
        a, b, c = self.normalized()
        cos_, sin_ = math.cos(angle), math.sin(angle)
        ra, rb = cos_ * a - sin_ * b, sin_ * a + cos_ * b
        px, py = a * c - center[0], b * c - center[1]
        qx = cos_ * px - sin_ * py + center[0]
        qy = sin_ * px + cos_ * py + center[1]
        return LineForm.from_normal(ra, rb, ra * qx + rb * qy,
                                    self.system, self.nu, self.d)

    def to_dict(self):
        """Serialize to the arrangement JSON line record."""
        return {
            'kind': self.kind,
            't': self.t if self.kind == NONVERTICAL else None,
            'gamma': self.offset,
            'nu': self.nu,
        }


@dataclass(frozen=True)
class Arrangement(object):
    """A labeled set of lines."""

    lines: tuple
    system: str = 'Custom'
    d: int = 0

    def __post_init__(self):
        """Reject unknown tags and repeated lines."""
        object.__setattr__(self, 'lines', tuple(self.lines))
        if self.system not in SYSTEMS:
            raise DomainError({'system': self.system})
        tol = get_config('NODAL_LINE_TOLERANCE')
        for (i, l1), (j, l2) in combinations(enumerate(self.lines), 2):
            if l1.same_line(l2, tol):
                raise DegenerateArrangementError(
                    (i, j), 'Lines {0} and {1} coincide'.format(i, j))

    def __len__(self):
        """Number of lines."""
        return len(self.lines)

    @property
    def m(self):
        """Half of the number of orientations ``d``."""
        return self.d // 2

    def normals(self):
        """Array of normalized ``(a, b, c)`` rows."""
        return np.array([line.normalized() for line in self.lines])

    def rotated(self, angle, center=(0.0, 0.0)):
        """Rotate every line about ``center``."""
        return Arrangement(
            tuple(line.rotated(angle, center) for line in self.lines),
            'Custom', self.d)

    def same_lines(self, other, tol=1e-9):
        """Set equality of the lines of two arrangements."""
        if len(self) != len(other):
            return False
        return all(any(l1.same_line(l2, tol) for l2 in other.lines)
                   for l1 in self.lines)

    def to_dict(self):
        """Serialize following ``nodal/arrangement-v1.0.0.json``."""
        return {
            'system': self.system,
            'd': self.d,
            'lines': [line.to_dict() for line in self.lines],
        }

    @classmethod
    def from_dict(cls, data):
        """Inverse of :py:meth:`to_dict`."""
        lines = []
        for rec in data['lines']:
            if rec['kind'] == NONVERTICAL:
                line = LineForm.nonvertical(rec['t'], rec['gamma'],
                                            data['system'], rec['nu'],
                                            data['d'])
            elif rec['kind'] == VERTICAL_X:
                line = LineForm.vertical(rec['gamma'], data['system'],
                                         rec['nu'], data['d'])
            else:
                line = LineForm.horizontal(rec['gamma'], data['system'],
                                           rec['nu'], data['d'])
            lines.append(line)
        return cls(tuple(lines), data['system'], data['d'])


@dataclass(frozen=True)
class VertexReport(object):
    """Clustered intersection points of an arrangement.

    ``points`` holds ``(x, y, count)`` triples sorted by location and
    ``incidences`` the indices of the lines through each point.
    """

    points: tuple
    simple: bool
    incidences: tuple = field(default=(), compare=False)

    def __len__(self):
        """Number of vertices."""
        return len(self.points)

    def locations(self):
        """``(n, 2)`` array of vertex coordinates."""
        return np.array([(x, y) for x, y, _ in self.points]).reshape(-1, 2)


def _sine(nu, d):
    return math.sin(nu * math.pi / d)


def _check_d(X, d):
    if X not in ('C', 'D') or int(d) != d or d % 2:
        raise DomainError({'X': X, 'd': d})
    m = d // 2
    if X == 'D' and m < 3:
        raise DomainError({'X': X, 'd': d})
    if X == 'C' and (m < 3 or m % 3):
        raise DomainError({'X': X, 'd': d})
    return m


def gamma_term(X, nu, d):
    """Offset of the line ``L^X_{nu,d}``.

    :param X: ``'C'`` or ``'D'``.
    :param nu: orientation index, ``tan(nu pi / d)`` is the slope.
    :param d: number of orientations, ``d = 2m``.
    :raises DomainError: if ``nu`` is not an index of the system.
    """
    try:
        m = _check_d(X, d)
    except DomainError:
        raise DomainError({'X': X, 'nu': nu, 'd': d})
    if X == 'D':
        half = m // 2
        if 1 <= nu <= m - 1:
            alpha = nu if nu <= half else m - nu
            return -sum(_sine(m + 1 - 2 * k, d) for k in range(1, alpha + 1))
        if m + 1 <= nu <= d - 1:
            alpha = nu - m if nu <= m + half else d - nu
            return sum(_sine(m + 1 - 2 * k, d) for k in range(1, alpha + 1))
    else:
        if 1 <= nu <= m - 2:
            alpha = nu if nu <= m - 3 else 1
            return -sum(_sine(m - 2 * k, d) for k in range(1, alpha + 1))
        if nu == m - 1:
            return 0.0
        if m + 1 <= nu <= 2 * m - 1:
            if nu <= m + (m - 1) // 2:
                alpha = nu - m
            else:
                alpha = 2 * m - 1 - nu
            return sum(_sine(m - 2 * k, d) for k in range(0, alpha + 1))
    raise DomainError({'X': X, 'nu': nu, 'd': d})


def axis_exponents(X, m):
    """Exponents of ``x`` and ``y`` in the prefactor of ``J_{m,Sigma_X}``."""
    if X == 'D':
        return ((1 - (-1) ** m) // 2, 0)
    return ((1 + (-1) ** m) // 2, 1)


def build_system(X, d):
    """All lines of the ``d``-system of type ``X``, axes included.

    The axis ``y = 0`` carries the label ``nu = 0`` and ``x = 0`` carries
    ``nu = m``, the orientations they complete.
    """
    m = _check_d(X, d)
    lines = [LineForm.horizontal(0.0, X, 0, d)]
    for nu in range(1, d):
        if nu == m:
            lines.append(LineForm.vertical(0.0, X, m, d))
            continue
        lines.append(LineForm.nonvertical(
            math.tan(nu * math.pi / d), gamma_term(X, nu, d), X, nu, d))
    return Arrangement(tuple(lines), X, d)


def subsystem(arr, parity):
    """Lines of a full system whose index ``nu`` has the given parity.

    ``Sigma_D = (D)_odd`` and ``Sigma_C = (C)_even``; their axes follow the
    prefactor exponents of the ``J`` polynomials.
    """
    if arr.system not in ('C', 'D') or parity not in ('odd', 'even'):
        raise DomainError({'system': arr.system, 'parity': parity})
    rest = 1 if parity == 'odd' else 0
    tags = {('D', 'odd'): 'Sigma_D', ('C', 'even'): 'Sigma_C',
            ('D', 'even'): 'D_even', ('C', 'odd'): 'C_odd'}
    tag = tags[(arr.system, parity)]
    m = arr.m
    if tag in ('Sigma_D', 'Sigma_C'):
        x_exp, y_exp = axis_exponents(arr.system, m)
    else:
        x_exp, y_exp = (m % 2 == rest), (rest == 0)
    lines = []
    for line in arr.lines:
        if line.kind == VERTICAL_X:
            keep = bool(x_exp)
        elif line.kind == HORIZONTAL_Y:
            keep = bool(y_exp)
        else:
            keep = line.nu % 2 == rest
        if keep:
            lines.append(line)
    return Arrangement(tuple(lines), tag, arr.d)


def sigma(X, m):
    """Shortcut for ``Sigma_D`` or ``Sigma_C`` of degree ``m``."""
    return subsystem(build_system(X, 2 * m), 'odd' if X == 'D' else 'even')


def _pairwise_points(normals):
    """Intersections of all non-parallel pairs.

    :returns: list of ``((i, j), (x, y))``.
    """
    tol = get_config('NODAL_LINE_TOLERANCE')
    found = []
    for i, j in combinations(range(len(normals)), 2):
        a1, b1, c1 = normals[i]
        a2, b2, c2 = normals[j]
        det = a1 * b2 - a2 * b1
        if abs(det) <= 1e-14:
            if abs(c1 - c2) <= tol or abs(c1 + c2) <= tol:
                raise DegenerateArrangementError(
                    (i, j), 'Lines {0} and {1} coincide'.format(i, j))
            continue
        found.append(((i, j), ((c1 * b2 - c2 * b1) / det,
                               (a1 * c2 - a2 * c1) / det)))
    return found


def vertices(arr, tol=None):
    """Cluster all pairwise intersections of an arrangement.

    :param tol: clustering radius, scaled by ``1 + |p|``; defaults to
        ``NODAL_VERTEX_TOLERANCE``.
    :rtype: :py:class:`VertexReport`
    :raises IncidenceError: if a cluster center misses its own lines.
    """
    tol = get_config('NODAL_VERTEX_TOLERANCE') if tol is None else tol
    if len(arr) < 2:
        raise DomainError({'lines': len(arr)})
    normals = arr.normals()
    pairs = _pairwise_points(normals)
    if not pairs:
        return VertexReport((), True, ())
    pts = np.array([p for _, p in pairs])
    assigned = np.full(len(pts), -1)
    centers = []
    for idx in range(len(pts)):
        if assigned[idx] >= 0:
            continue
        radius = tol * (1.0 + np.hypot(*pts[idx]))
        close = (np.hypot(*(pts - pts[idx]).T) <= radius) & (assigned < 0)
        assigned[close] = len(centers)
        centers.append(pts[close].mean(axis=0))

    records = []
    for cx, cy in centers:
        radius = tol * (1.0 + math.hypot(cx, cy))
        residual = np.abs(normals[:, 0] * cx + normals[:, 1] * cy -
                          normals[:, 2])
        incident = tuple(int(k) for k in np.nonzero(residual <= radius)[0])
        records.append((float(cx), float(cy), incident))
    records.sort(key=lambda r: (r[0], r[1]))
    for x, y, inc in records:
        if len(inc) < 2:
            raise IncidenceError((x, y), len(inc))
    points = tuple((x, y, len(inc)) for x, y, inc in records)
    incidences = tuple(inc for _, _, inc in records)
    simple = all(count == 2 for _, _, count in points)
    return VertexReport(points, simple, incidences)


def _intersection(n1, n2):
    det = n1[0] * n2[1] - n2[0] * n1[1]
    if abs(det) <= 1e-14:
        return None
    return np.array([(n1[2] * n2[1] - n2[2] * n1[1]) / det,
                     (n1[0] * n2[2] - n2[0] * n1[2]) / det])


def triangular_faces(arr, tol=None):
    """Bounded triangular faces of a simple arrangement.

    A triple of lines bounds a face when its three pairwise intersections
    are distinct and every other line leaves the three corners strictly on
    one side.

    :returns: ``(count, triangles)`` where each triangle is
        ``((i, j, k), (bx, by))`` with the barycenter.
    :raises NonSimpleArrangementError: if a vertex is not ordinary.
    """
    tol = get_config('NODAL_VERTEX_TOLERANCE') if tol is None else tol
    if not vertices(arr, tol).simple:
        raise NonSimpleArrangementError(
            'Triangle census requires a simple arrangement')
    normals = arr.normals()
    n = len(normals)
    triangles = []
    for i, j, k in combinations(range(n), 3):
        corners = [_intersection(normals[i], normals[j]),
                   _intersection(normals[j], normals[k]),
                   _intersection(normals[i], normals[k])]
        if any(c is None for c in corners):
            continue
        corners = np.array(corners)
        scale = tol * (1.0 + np.abs(corners).max())
        if min(np.hypot(*(corners[0] - corners[1])),
               np.hypot(*(corners[1] - corners[2])),
               np.hypot(*(corners[0] - corners[2]))) <= scale:
            continue
        others = np.delete(normals, [i, j, k], axis=0)
        side = others[:, :2].dot(corners.T) - others[:, 2:3]
        same_side = np.all(side > scale, axis=1) | \
            np.all(side < -scale, axis=1)
        if np.all(same_side):
            bary = corners.mean(axis=0)
            triangles.append(((i, j, k), (float(bary[0]), float(bary[1]))))
    return len(triangles), triangles


@dataclass(frozen=True)
class Prototile(object):
    """Congruence class of triangular faces.

    ``sides`` are the sorted side lengths and ``members`` the line index
    triples of the faces in the class.
    """

    sides: tuple
    members: tuple

    @property
    def kind(self):
        """``'equilateral'``, ``'isosceles'`` or ``'scalene'``."""
        a, b, c = self.sides
        tol = 1e-7 * c
        if c - a <= tol:
            return 'equilateral'
        if b - a <= tol or c - b <= tol:
            return 'isosceles'
        return 'scalene'


def _corners(normals, labels):
    i, j, k = labels
    return np.array([_intersection(normals[i], normals[j]),
                     _intersection(normals[j], normals[k]),
                     _intersection(normals[i], normals[k])])


def prototiles(arr, tol=1e-7):
    """Classify the triangular faces by their sorted side lengths.

    Mirror images share a class. Classes are sorted by side lengths.

    :param tol: side lengths closer than ``tol`` (relative) coincide.
    :returns: list of :py:class:`Prototile`.
    """
    normals = arr.normals()
    _, triangles = triangular_faces(arr)
    classes = []
    for labels, _ in triangles:
        corners = _corners(normals, labels)
        sides = np.sort(np.hypot(*(corners - np.roll(corners, 1, axis=0)).T))
        for entry in classes:
            if np.all(np.abs(entry[0] - sides) <= tol * sides.max()):
                entry[1].append(labels)
                break
        else:
            classes.append((sides, [labels]))
    return sorted((Prototile(tuple(float(s) for s in sides), tuple(members))
                   for sides, members in classes), key=lambda p: p.sides)


def rotation_classes(arr, order=3, tol=1e-7):
    """Orbits of the triangular faces under rotations about the center.

    The center is the mean of all vertices, fixed by any rotation of a
    symmetric arrangement.

    :param order: rotations by ``2 pi / order``.
    :returns: list of orbits, each a tuple of line index triples.
    :raises DomainError: if a rotated face is not a face.
    """
    center = vertices(arr).locations().mean(axis=0)
    _, triangles = triangular_faces(arr)
    bary = np.array([b for _, b in triangles]).reshape(-1, 2) - center
    radius = tol * (1.0 + np.abs(bary).max()) if len(bary) else tol
    orbit_of = [-1] * len(triangles)
    orbits = []
    for start in range(len(triangles)):
        if orbit_of[start] >= 0:
            continue
        members = []
        for step in range(order):
            angle = 2 * math.pi * step / order
            cos_, sin_ = math.cos(angle), math.sin(angle)
            x, y = bary[start]
            target = np.array([cos_ * x - sin_ * y, sin_ * x + cos_ * y])
            dist = np.hypot(*(bary - target).T)
            idx = int(np.argmin(dist))
            if dist[idx] > radius:
                raise DomainError({'order': order,
                                   'face': triangles[start][0]})
            if orbit_of[idx] < 0:
                orbit_of[idx] = len(orbits)
                members.append(triangles[idx][0])
        orbits.append(tuple(members))
    return orbits


def prototile_count_formula(m):
    """Triangle shapes of ``Sigma_C`` up to rotation, ``m(m-3)/9 + 1``."""
    if m % 3:
        raise DomainError({'m': m})
    return m * (m - 3) // 9 + 1


def triangle_count_formula(X, m):
    """Closed-form number of bounded triangles of ``Sigma_X``.

    For ``Sigma_D`` the count ``m^2/3 - m`` vanishes at ``m = 3`` where the
    three lines still bound one triangle.
    """
    if X == 'D':
        if m % 3 == 0:
            return max(m * m // 3 - m, 1)
        return (m * m + 2) // 3 - m
    return 1 + m * (m - 3) // 3


def bounding_radius(arr):
    """Largest distance of a vertex from the origin."""
    locs = vertices(arr).locations()
    return float(np.hypot(locs[:, 0], locs[:, 1]).max())


def lbar_line(k, m):
    """Line ``Lbar_{k,m}``.

    ``y - (cos 2phi - x) tan phi - sin 2phi`` with ``phi = k pi / (6m)``;
    indices ``k = 3m (mod 6m)`` give the line ``x = -1``.
    """
    r = k % (6 * m)
    if r == 3 * m:
        return LineForm.vertical(-1.0, 'Lbar', k, 2 * m)
    phi = r * math.pi / (6 * m)
    tan_ = math.tan(phi)
    return LineForm.nonvertical(
        -tan_, math.cos(2 * phi) * tan_ + math.sin(2 * phi), 'Lbar', k,
        2 * m)


def lbar_set(m, residues, system='Lbar'):
    """Lines ``Lbar_{6nu+r,m}`` for ``nu = 0..m-1`` and ``r`` in residues.

    Lines are ordered by ascending ``k``, which fixes the labels
    ``l_1, l_2, ...`` used by the index rules.
    """
    ks = sorted(6 * nu + r for nu in range(m) for r in residues)
    return Arrangement(tuple(lbar_line(k, m) for k in ks), system, 2 * m)
