# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Critical points of the arrangement polynomials.

Locations are predicted from the line sets ``M_{-1}`` and ``M_8``, polished
by damped Newton iteration and classified by the Hessian. A grid seeded
oracle recovers the critical set independently.
"""

from __future__ import absolute_import, print_function

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .arrangements import bounding_radius, lbar_line, lbar_set, sigma, \
    triangle_count_formula, triangular_faces, vertices
from .errors import ConcurrenceMismatchError, ConvergenceError, \
    DegeneratePointError, DomainError, SpectrumViolationError
from .polynomials import critical_points_1d, normalization_data, \
    rotated_restriction, scaling_constants, sigma_d_poly, to_folding_frame, \
    to_normalized_frame
from .signals import critical_point_polished
from .utils import get_config, parallel_map, require_multiple_of_three

__all__ = (
    'CriticalPoint',
    'CriticalSpectrum',
    'brute_force_critical',
    'candidate_maxima',
    'candidate_minima',
    'critical_spectrum',
    'lbar_line',
    'polish_critical',
)

JC_LEVELS = (0.0, -1.0, 8.0)
"""Saddle, minimum and maximum levels of ``J_m^C`` and ``Jbar_m^C``."""


@dataclass(frozen=True)
class CriticalPoint(object):
    """A polished, nondegenerate critical point."""

    location: tuple
    value: float
    morse: str
    grad_norm: float
    hessian_det: float

    def to_row(self):
        """CSV row ``x, y, value, morse, grad_norm, hessian_det``."""
        return [self.location[0], self.location[1], self.value, self.morse,
                self.grad_norm, self.hessian_det]


@dataclass(frozen=True)
class CriticalSpectrum(object):
    """Critical points grouped by their three levels.

    ``levels`` and ``counts`` are ordered ``(saddle, min, max)``.
    """

    kind: str
    m: int
    levels: tuple
    counts: tuple
    points: tuple = field(default=(), compare=False)

    def by_morse(self, morse):
        """Points of one Morse type."""
        return [p for p in self.points if p.morse == morse]

    def level_counts(self, tol=None):
        """Number of points per distinct critical value.

        Values closer than ``tol`` (scaled by ``1 + |value|``) share a
        level.
        """
        tol = get_config('NODAL_LEVEL_TOLERANCE') if tol is None else tol
        groups = []
        for value in sorted(p.value for p in self.points):
            if groups and abs(value - groups[-1][0]) <= \
                    tol * (1.0 + abs(groups[-1][0])):
                groups[-1][1] += 1
            else:
                groups.append([value, 1])
        return [(v, n) for v, n in groups]

    def to_dict(self):
        """Serialize following ``nodal/spectrum-v1.0.0.json``."""
        names = ('saddle', 'min', 'max')
        return {
            'kind': self.kind,
            'm': self.m,
            'levels': {name: None if math.isnan(v) else v
                       for name, v in zip(names, self.levels)},
            'counts': dict(zip(names, self.counts)),
        }


#
# Combinatorial predictions
#
def concurrences(arr, tol=None):
    """Triple points of an arrangement.

    :returns: list of ``((x, y), labels)`` with 1-based line labels in
        the arrangement order.
    """
    report = vertices(arr, tol)
    out = []
    for (x, y, count), inc in zip(report.points, report.incidences):
        if count >= 3:
            out.append(((x, y), tuple(i + 1 for i in inc)))
    return out


def _minima_rule(m, labels):
    if len(labels) != 3 or len(set(k % 2 for k in labels)) != 1:
        return False
    target = 2 * m + 4 if labels[0] % 2 == 0 else 2 * m + 3
    return (sum(labels) - target) % (2 * m) == 0


def _maxima_rule(m, labels):
    return len(labels) == 3 and (sum(labels) - 1) % m == 0


def _predict(m, residues, system, expected, rule, mirror):
    require_multiple_of_three(m)
    found = concurrences(lbar_set(m, residues, system))
    if len(found) != expected:
        raise ConcurrenceMismatchError(expected, len(found))
    broken = [labels for _, labels in found if not rule(m, labels)]
    if broken:
        raise ConcurrenceMismatchError(
            expected, len(found),
            'Index rule broken by {0}'.format(broken))
    sign = -1.0 if mirror else 1.0
    return sorted((x, sign * y) for (x, y), _ in found)


def minima_count(m):
    """``1 + m(m-3)/3``."""
    return 1 + m * (m - 3) // 3


def maxima_count(m):
    """``m(m-3)/6``."""
    return m * (m - 3) // 6


def sigma_d_minima_count(m):
    """Local minima of ``J_{m Sigma_D}``, one per triangle of ``Sigma_D``.

    At ``m = 3`` the only triangle holds a maximum and there is no
    minimum.
    """
    if m == 3:
        return 0
    return triangle_count_formula('D', m)


def candidate_minima(m, mirror=True):
    """Predicted minima from the triple points of ``M_{-1}``.

    The triple points are the minima of ``Jbar_m^C``; with ``mirror`` they
    are reflected to ``(x, -y)``, the minima of ``J_m^C``.

    :raises ConcurrenceMismatchError: if the census or an index rule
        fails.
    """
    return _predict(m, (0, 2), 'M_minus1', minima_count(m), _minima_rule,
                    mirror)


def candidate_maxima(m, mirror=True):
    """Predicted maxima from the triple points of ``M_8``."""
    return _predict(m, (4,), 'M_8', maxima_count(m), _maxima_rule, mirror)


def _wrap(k, n):
    return (k - 1) % n + 1


def minima_index_pattern(m):
    """Label triples generated by the index rules of ``M_{-1}``.

    :returns: dict with ``'x_axis'`` (pairs ``l_1, l_{3+2k}``) and
        ``'even'`` (pairs ``l_{2i}, l_{2j}`` with ``i < j <= q`` and their
        two rotated copies); the third label follows from the sum rule.
    """
    require_multiple_of_three(m)
    q = m // 3
    n = 2 * m
    x_axis = []
    for k in range((m - 3) // 2 + 1):
        k1, k2 = 1, 3 + 2 * k
        x_axis.append(tuple(sorted((k1, k2, _wrap(n + 3 - k1 - k2, n)))))
    even = []
    for i, j in combinations(range(1, q + 1), 2):
        k1, k2 = 2 * i, 2 * j
        for rot in range(3):
            shift = 2 * q * rot
            even.append(tuple(sorted(
                _wrap(k + shift, n)
                for k in (k1, k2, n + 4 - k1 - k2))))
    return {'x_axis': x_axis, 'even': even}


def maxima_index_pattern(m):
    """Label triples of ``M_8`` from pairs ``l_i, l_j``, ``i < j <= q``."""
    require_multiple_of_three(m)
    q = m // 3
    out = []
    for k1, k2 in combinations(range(1, q + 1), 2):
        for rot in range(3):
            out.append(tuple(sorted(
                _wrap(k + q * rot, m) for k in (k1, k2, 1 - k1 - k2))))
    return out


def check_index_patterns(m):
    """Compare generated label triples with the detected concurrences.

    :returns: dict mapping each family to the generated triples that no
        detected triple point carries; empty lists mean agreement.
    """
    minima = set(labels for _, labels in
                 concurrences(lbar_set(m, (0, 2), 'M_minus1')))
    maxima = set(labels for _, labels in
                 concurrences(lbar_set(m, (4,), 'M_8')))
    patterns = minima_index_pattern(m)
    return {
        'x_axis': [t for t in patterns['x_axis'] if t not in minima],
        'even': [t for t in patterns['even'] if t not in minima],
        'maxima': [t for t in maxima_index_pattern(m) if t not in maxima],
    }


#
# Newton polishing
#
def _classify(p, x, y):
    hess = p.hessian(x, y)
    eig = np.linalg.eigvalsh(hess)
    rtol = get_config('NODAL_CERTIFY_RTOL')
    if np.abs(eig).min() <= rtol * (1.0 + np.abs(eig).max()):
        raise DegeneratePointError((x, y), 'Singular Hessian at {0}'.format(
            (x, y)))
    if eig.min() > 0:
        morse = 'min'
    elif eig.max() < 0:
        morse = 'max'
    else:
        morse = 'saddle'
    return morse, float(np.linalg.det(hess))


def polish_critical(p, guess, max_iter=None, rtol=None):
    """Damped Newton iteration on the gradient of ``p``.

    The step is halved while the gradient norm does not decrease.

    :param p: :py:class:`nodal_surfaces.polynomials.BivarPoly`.
    :param guess: starting point ``(x, y)``.
    :raises ConvergenceError: when no convergence within ``max_iter``.
    :raises DegeneratePointError: when the Hessian is singular.
    :rtype: :py:class:`CriticalPoint`
    """
    max_iter = max_iter or get_config('NODAL_NEWTON_MAX_ITER')
    rtol = rtol or get_config('NODAL_NEWTON_GRAD_RTOL')
    floor = get_config('NODAL_CERTIFY_RTOL')
    point = np.array(guess, dtype=float)
    grad = p.gradient(*point)
    norm = float(np.hypot(*grad))
    converged = False
    for _ in range(max_iter + 1):
        scale = 1.0 + p.gradient_scale(*point)
        if norm < rtol * scale:
            converged = True
            break
        try:
            step = np.linalg.solve(p.hessian(*point), grad)
        except np.linalg.LinAlgError:
            raise DegeneratePointError(tuple(point))
        t = 1.0
        while True:
            cand = point - t * step
            cgrad = p.gradient(*cand)
            cnorm = float(np.hypot(*cgrad))
            if cnorm < norm or t < 1e-4:
                break
            t *= 0.5
        if cnorm >= norm:
            # Rounding floor reached.
            converged = norm < floor * scale
            break
        point, grad, norm = cand, cgrad, cnorm
    if not converged:
        raise ConvergenceError(tuple(point), 'Newton did not converge')
    x, y = float(point[0]), float(point[1])
    morse, det = _classify(p, x, y)
    result = CriticalPoint((x, y), float(p.value_at(x, y)), morse, norm,
                           det)
    critical_point_polished.send(result)
    return result


def _dedupe(points, tol=None):
    tol = get_config('NODAL_DEDUPE_TOLERANCE') if tol is None else tol
    out = []
    for cp in sorted(points, key=lambda c: c.location):
        x, y = cp.location
        if any(math.hypot(x - o.location[0], y - o.location[1]) <=
               tol * (1.0 + math.hypot(x, y)) for o in out):
            continue
        out.append(cp)
    return out


def _try_polish(p):
    def polish(guess):
        try:
            return polish_critical(p, guess)
        except (ConvergenceError, DegeneratePointError):
            return None
    return polish


#
# Grid oracle
#
def brute_force_critical(p, window, grid_n=None):
    """Critical points of ``p`` inside ``window`` by grid seeding.

    Every grid cell where both partial derivatives change sign over its
    2x2 cell neighbourhood seeds a Newton run.

    :param window: ``(xmin, xmax, ymin, ymax)``.
    :param grid_n: cells per axis, at least 64.
    """
    grid_n = grid_n or get_config('NODAL_ORACLE_GRID')
    if grid_n < 64:
        raise DomainError({'grid_n': grid_n})
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, grid_n + 1)
    ys = np.linspace(ymin, ymax, grid_n + 1)
    gx_, gy_ = np.meshgrid(xs, ys, indexing='ij')
    grad = p.gradient(gx_, gy_)

    def changes(values):
        s = np.sign(values)
        lo = np.minimum.reduce([s[:-2, :-2], s[1:-1, :-2], s[2:, :-2],
                                s[:-2, 1:-1], s[1:-1, 1:-1], s[2:, 1:-1],
                                s[:-2, 2:], s[1:-1, 2:], s[2:, 2:]])
        hi = np.maximum.reduce([s[:-2, :-2], s[1:-1, :-2], s[2:, :-2],
                                s[:-2, 1:-1], s[1:-1, 1:-1], s[2:, 1:-1],
                                s[:-2, 2:], s[1:-1, 2:], s[2:, 2:]])
        return (lo <= 0) & (hi >= 0)

    flags = changes(grad[0]) & changes(grad[1])
    i, j = np.nonzero(flags)
    seeds = list(zip(xs[i + 1], ys[j + 1]))
    polished = [cp for cp in parallel_map(_try_polish(p), seeds) if cp]
    inside = [cp for cp in polished
              if xmin <= cp.location[0] <= xmax and
              ymin <= cp.location[1] <= ymax]
    return _dedupe(inside)


def match_points(first, second, tol=None):
    """Tell if two point lists are in bijection within ``tol``."""
    tol = get_config('NODAL_MATCH_TOLERANCE') if tol is None else tol
    if len(first) != len(second):
        return False
    a = np.array(first, dtype=float).reshape(-1, 2)
    b = np.array(second, dtype=float).reshape(-1, 2)
    if not len(a):
        return True
    dist = np.hypot(a[:, None, 0] - b[None, :, 0],
                    a[:, None, 1] - b[None, :, 1])
    close = dist <= tol
    return bool(np.all(close.sum(axis=1) == 1) and
                np.all(close.sum(axis=0) == 1))


#
# Spectrum
#
def predicted_critical_points(m, kind='J_C'):
    """Seeds ``(saddles, minima, maxima)`` for a ``J_m^C`` spectrum."""
    norm = normalization_data(m)
    locs = vertices(sigma('C', m)).locations()
    sx, sy = to_normalized_frame(norm, locs[:, 0], locs[:, 1])
    mirror = kind == 'J_C'
    sign = 1.0 if mirror else -1.0
    saddles = sorted(zip(sx, sign * sy))
    return (saddles, candidate_minima(m, mirror), candidate_maxima(m, mirror))


def _sigma_d_seeds(m, kind):
    arr = sigma('D', m)
    locs = vertices(arr).locations()
    _, triangles = triangular_faces(arr)
    bary = np.array([b for _, b in triangles]).reshape(-1, 2)
    radius = get_config('NODAL_CLIP_FACTOR') * bounding_radius(arr)
    center = locs.mean(axis=0)
    corners = np.array([[center[0] - radius, center[1] - radius],
                        [center[0] + radius, center[1] + radius]])
    if kind == 'F':
        locs = np.column_stack(to_folding_frame(m, locs[:, 0], locs[:, 1]))
        bary = np.column_stack(to_folding_frame(m, bary[:, 0], bary[:, 1]))
        corners = np.column_stack(
            to_folding_frame(m, corners[:, 0], corners[:, 1]))
    window = (corners[0, 0], corners[1, 0], corners[0, 1], corners[1, 1])
    seeds = [tuple(b) for b in bary] if sigma_d_minima_count(m) else []
    return [tuple(v) for v in locs], seeds, window


def _level_of(value, levels, tol):
    for idx, level in enumerate(levels):
        if abs(value - level) <= tol:
            return idx
    return None


def _sigma_d_level_scale(m, low):
    """``lambda_{m Sigma_D}``, or ``1 / b_m`` when there is no minimum."""
    if math.isnan(low):
        return 1.0 / scaling_constants(m)[1]
    return -low


def critical_spectrum(p, m, kind='J_C', grid_n=None):
    """Polish the predicted critical set and verify its three levels.

    :param p: the polynomial of the given kind.
    :param kind: ``'J_C'`` or ``'Jbar_C'`` (levels ``0, -1, 8`` and the
        counts ``C(m,2)``, ``1 + m(m-3)/3``, ``m(m-3)/6``), or
        ``'J_SigmaD'`` and ``'F'`` whose minimum and maximum levels are
        measured; their maxima come from the grid oracle.
    :raises SpectrumViolationError: for a value off its level, a Morse type
        off its level or a wrong count.
    :rtype: :py:class:`CriticalSpectrum`
    """
    tol = get_config('NODAL_LEVEL_TOLERANCE')
    if kind in ('J_C', 'Jbar_C'):
        saddles, minima, maxima = predicted_critical_points(m, kind)
        expected = (m * (m - 1) // 2, minima_count(m), maxima_count(m))
        oracle = []
    elif kind in ('J_SigmaD', 'F'):
        saddles, minima, window = _sigma_d_seeds(m, kind)
        n_min = sigma_d_minima_count(m)
        expected = (m * (m - 1) // 2, n_min,
                    (m - 1) * (m - 2) // 2 - n_min)
        maxima = []
        oracle = [cp for cp in brute_force_critical(p, window, grid_n)
                  if cp.morse == 'max']
    else:
        raise DomainError({'kind': kind})

    polish = _try_polish(p)
    groups = []
    for morse, seeds in zip(('saddle', 'min', 'max'),
                            (saddles, minima, maxima)):
        found = parallel_map(polish, seeds)
        for seed, cp in zip(seeds, found):
            if cp is None:
                raise SpectrumViolationError(seed, None,
                                             'No critical point near seed')
        groups.append(_dedupe(found))
    if oracle:
        groups[2] = _dedupe(oracle)

    if kind in ('J_C', 'Jbar_C'):
        levels = JC_LEVELS
    else:
        levels = (0.0,
                  float(np.mean([cp.value for cp in groups[1]]))
                  if groups[1] else float('nan'),
                  float(np.mean([cp.value for cp in groups[2]]))
                  if groups[2] else float('nan'))
    # J_SigmaD is unnormalized; its levels are checked relative to lambda.
    scale = _sigma_d_level_scale(m, levels[1]) if kind == 'J_SigmaD' \
        else 1.0
    for idx, (morse, group) in enumerate(zip(('saddle', 'min', 'max'),
                                             groups)):
        for cp in group:
            level = _level_of(cp.value, levels, tol * scale)
            if level != idx or cp.morse != morse:
                raise SpectrumViolationError(cp.location, cp.value)
    counts = tuple(len(g) for g in groups)
    if counts != expected:
        raise SpectrumViolationError(None, counts,
                                     'Counts {0} differ from {1}'.format(
                                         counts, expected))
    points = tuple(sorted((cp for g in groups for cp in g),
                          key=lambda c: c.location))
    return CriticalSpectrum(kind, m, levels, counts, points)


def sigma_d_lambda(m, spectrum=None):
    """Measured ``lambda_{m Sigma_D}``, minus the common minimum value.

    At ``m = 3`` there is no minimum and ``1 / b_3`` is returned, the
    value that ``F = b_m J_{m Sigma_D}(...)`` maps onto the level ``-1``.
    """
    if spectrum is None:
        spectrum = sigma_d_minima_spectrum(m, sigma_d_poly(m))
    return _sigma_d_level_scale(m, spectrum.levels[1])


def sigma_d_minima_spectrum(m, p, kind='J_SigmaD'):
    """Saddles and minima of ``J_{m Sigma_D}`` or ``F`` without maxima.

    Enough for the surfaces, where the maxima never meet a z-level. The
    minimum level is ``nan`` when there is no minimum.
    """
    tol = get_config('NODAL_LEVEL_TOLERANCE')
    saddles, minima, _ = _sigma_d_seeds(m, kind)
    polish = _try_polish(p)
    groups = [parallel_map(polish, saddles), parallel_map(polish, minima)]
    if any(cp is None for g in groups for cp in g):
        raise SpectrumViolationError(None, None, 'Polishing failed')
    groups = [_dedupe(g) for g in groups]
    low = float(np.mean([cp.value for cp in groups[1]])) if groups[1] \
        else float('nan')
    scale = _sigma_d_level_scale(m, low) if kind == 'J_SigmaD' else 1.0
    for cp in groups[0]:
        if abs(cp.value) > tol * scale or cp.morse != 'saddle':
            raise SpectrumViolationError(cp.location, cp.value)
    for cp in groups[1]:
        if abs(cp.value - low) > tol * scale or cp.morse != 'min':
            raise SpectrumViolationError(cp.location, cp.value)
    return CriticalSpectrum(kind, m, (0.0, low, float('nan')),
                            (len(groups[0]), len(groups[1]), 0),
                            tuple(groups[0] + groups[1]))


#
# Rotation catalog
#
def minima_catalog_angles(m):
    """Rotation angles whose x-axis restriction meets every minimum.

    Known for ``m = 9``: ``pi/54 + l pi/3`` and ``(2 + 6k) pi/54 + l pi/3``.
    """
    if m != 9:
        raise DomainError({'m': m})
    base = [1] + [2 + 6 * k for k in range(3)]
    return [b * math.pi / 54 + l * math.pi / 3
            for l in range(3) for b in base]


def maxima_catalog_angles(m):
    """Rotation angles ``6k pi/54 + l pi/3`` reaching every maximum."""
    if m != 9:
        raise DomainError({'m': m})
    return [6 * k * math.pi / 54 + l * math.pi / 3
            for l in range(3) for k in range(3)]


def catalog_extrema(m, theta, kind='min'):
    """1D extrema of the rotated restriction lifted to the plane.

    :returns: list of ``((x, y), s, value)`` where ``s`` is the abscissa on
        the rotated axis.
    """
    norm = normalization_data(m)
    g = rotated_restriction(m, theta)
    delta = theta - norm.theta
    out = []
    for s, value, morse in critical_points_1d(g):
        if morse == kind:
            out.append(((s * math.cos(delta), -s * math.sin(delta)), s,
                        value))
    return out


def catalog_points(m, kind='min', tol=1e-6):
    """Distinct plane points reached by the catalog at the right level."""
    if kind == 'min':
        angles, level = minima_catalog_angles(m), JC_LEVELS[1]
    else:
        angles, level = maxima_catalog_angles(m), JC_LEVELS[2]
    found = []
    for theta in angles:
        for (x, y), _, value in catalog_extrema(m, theta, kind):
            if abs(value - level) > tol:
                continue
            if any(math.hypot(x - a, y - b) <= 1e-6 for a, b in found):
                continue
            found.append((x, y))
    return sorted(found)
