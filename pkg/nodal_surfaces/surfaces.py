# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Separable surfaces ``J(x, y) + g(z) = 0`` and their real nodes."""

from __future__ import absolute_import, print_function

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .arrangements import sigma, vertices
from .critical import critical_spectrum, predicted_critical_points, \
    sigma_d_lambda, sigma_d_minima_count, sigma_d_minima_spectrum
from .errors import CertificationError, DomainError, NodalError, \
    SpectrumUnavailableError
from .polynomials import build_Jbar, chebyshev_T, critical_points_1d, \
    folding_F, normalized_JC, sigma_d_poly, to_folding_frame
from .signals import node_certified
from .utils import get_config, parallel_map, require_multiple_of_three, \
    scaled_tolerance

C_FAMILIES = ('P_C', 'Q_C', 'Qbar_C')
D_FAMILIES = ('P_SigmaD', 'Chmutov')
FAMILIES = C_FAMILIES + D_FAMILIES

NODE_CLASSES = {
    'saddle': 'vertex_type',
    'min': 'triangle_type',
    'max': 'maximum_type',
}


@dataclass(frozen=True)
class SurfaceSpec(object):
    """Surface ``xy_part(x, y) + z_part(z) = 0``.

    ``center`` and ``radius`` describe the clip sphere used for rendering.
    """

    family: str
    m: int
    xy_part: object
    z_part: object
    center: tuple = (0.0, 0.0, 0.0)
    radius: float = 1.0
    lambda_: float = field(default=None, compare=False)

    def __call__(self, x, y, z):
        """Evaluate the surface polynomial."""
        return self.xy_part(x, y) + self.z_part(z)

    def gradient(self, x, y, z):
        """3D gradient."""
        gxy = self.xy_part.gradient(x, y)
        return np.array([gxy[0], gxy[1], self.z_part.deriv()(z)])

    def hessian(self, x, y, z):
        """Block diagonal 3x3 Hessian."""
        hess = np.zeros((3, 3))
        hess[:2, :2] = self.xy_part.hessian(x, y)
        hess[2, 2] = self.z_part.deriv(2)(z)
        return hess

    def assemble(self):
        """Dense coefficient cube ``c[i, j, k]`` of the surface polynomial."""
        xy = self.xy_part.coeffs
        zc = self.z_part.coeffs
        n = max(xy.shape[0], len(zc))
        cube = np.zeros((n, n, n))
        cube[:xy.shape[0], :xy.shape[1], 0] += xy
        cube[0, 0, :len(zc)] += zc
        return cube

    def evaluate_assembled(self, x, y, z):
        """Evaluate through :py:meth:`assemble`."""
        return P.polyval3d(x, y, z, self.assemble())


@dataclass(frozen=True)
class Node(object):
    """A certified conical node."""

    location: tuple
    node_class: str
    grad_norm: float
    hessian3_det: float
    signature: tuple

    def to_row(self):
        """CSV row of the node list."""
        x, y, z = self.location
        return [x, y, z, self.node_class, self.grad_norm, self.hessian3_det,
                self.signature[0], self.signature[1]]


@dataclass(frozen=True)
class NodeCountReport(object):
    """Enumerated against closed-form node count."""

    m: int
    family: str
    enumerated: int
    formula: int
    per_class: dict
    certified: bool = True

    @property
    def matches(self):
        """``enumerated == formula``."""
        return self.enumerated == self.formula

    def to_dict(self):
        """Serialize following ``nodal/node-report-v1.0.0.json``."""
        return {
            'family': self.family,
            'm': self.m,
            'enumerated': self.enumerated,
            'formula': self.formula,
            'per_class': dict(self.per_class),
            'certified': self.certified,
        }


def _check_family(family, m):
    if family not in FAMILIES:
        raise DomainError({'family': family, 'm': m})
    if family in C_FAMILIES:
        require_multiple_of_three(m, family=family)
    elif int(m) != m or m < 3 or m > get_config('NODAL_MAX_DEGREE'):
        raise DomainError({'family': family, 'm': m})


def _restriction_part(restriction, m):
    """``((-1)^(m+1) / 4) (r(z) - 1 + 2 (-1)^(m+1))``."""
    sign = (-1) ** (m + 1)
    return (restriction + (-1.0 + 2.0 * sign)) * (sign / 4.0)


def _clip_radius(points, center, zs):
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    reach = np.hypot(pts[:, 0] - center[0], pts[:, 1] - center[1]).max()
    if len(zs):
        reach = max(reach, max(abs(z) for z in zs))
    return float(get_config('NODAL_CLIP_FACTOR') * reach)


def build_surface(family, m):
    """Assemble a surface of the given family and degree.

    :param family: one of ``P_C``, ``Q_C``, ``Qbar_C`` (``m = 3q``),
        ``P_SigmaD`` or ``Chmutov`` (``3 <= m <= NODAL_MAX_DEGREE``; at
        ``m = 3`` the single triangle of ``Sigma_D`` holds a maximum and
        only saddle nodes remain).
    :raises DomainError: for an unknown family or an unsupported degree.
    :rtype: :py:class:`SurfaceSpec`
    """
    _check_family(family, m)
    cheb = chebyshev_T(m)
    lam = None
    if family in C_FAMILIES:
        xy = build_Jbar(m) if family == 'Qbar_C' else normalized_JC(m)
        if family == 'P_C':
            z = (cheb + 1.0) * 0.5
        else:
            z = _restriction_part(xy.restrict_y0(), m)
        saddles = predicted_critical_points(m)[0]
        center = (0.0, 0.0, 0.0)
    else:
        locs = vertices(sigma('D', m)).locations()
        if family == 'P_SigmaD':
            xy = sigma_d_poly(m)
            lam = sigma_d_lambda(m)
            z = (cheb + 1.0) * (lam / 2.0)
            saddles = locs
        else:
            xy = folding_F(m)
            z = (cheb + 1.0) * 0.5
            saddles = np.column_stack(
                to_folding_frame(m, locs[:, 0], locs[:, 1]))
        mid = np.asarray(saddles).mean(axis=0)
        center = (float(mid[0]), float(mid[1]), 0.0)
    zs = [c for c, _, _ in critical_points_1d(z)]
    radius = _clip_radius(saddles, center, zs)
    return SurfaceSpec(family, m, xy, z, center, radius, lam)


def mirror_surface(s):
    """The mirror partner ``Q_C <-> Qbar_C``."""
    partner = {'Q_C': 'Qbar_C', 'Qbar_C': 'Q_C'}
    if s.family not in partner:
        raise DomainError({'family': s.family})
    return build_surface(partner[s.family], s.m)


def z_critical_points(g):
    """Real critical points ``(z, value, kind)`` of the z-part.

    :raises DomainError: for a constant polynomial.
    """
    if g.degree < 1:
        raise DomainError({'degree': g.degree})
    return critical_points_1d(g)


def xy_critical_points(s):
    """Critical points of the xy-part that can meet a z-level."""
    if s.family in ('P_C', 'Q_C'):
        return critical_spectrum(s.xy_part, s.m, 'J_C').points
    elif s.family == 'Qbar_C':
        return critical_spectrum(s.xy_part, s.m, 'Jbar_C').points
    kind = 'J_SigmaD' if s.family == 'P_SigmaD' else 'F'
    return sigma_d_minima_spectrum(s.m, s.xy_part, kind).points


def certify_node(s, point, node_class):
    """Check gradient, Hessian and signature at a node candidate.

    :raises CertificationError: naming the point and the failed check.
    :rtype: :py:class:`Node`
    """
    x, y, z = point
    rtol = get_config('NODAL_CERTIFY_RTOL')
    grad = s.gradient(x, y, z)
    norm = float(np.linalg.norm(grad))
    scale = 1.0 + s.xy_part.gradient_scale(x, y) + \
        s.z_part.deriv().scale(z)
    if norm >= rtol * scale:
        raise CertificationError(point, 'gradient {0:.3g}'.format(norm))
    hess = s.hessian(x, y, z)
    eig = np.linalg.eigvalsh(hess)
    if np.abs(eig).min() <= rtol * (1.0 + np.abs(eig).max()):
        raise CertificationError(point, 'degenerate Hessian')
    signature = (int((eig > 0).sum()), int((eig < 0).sum()))
    if signature not in ((2, 1), (1, 2)):
        raise CertificationError(point, 'solitary signature {0}'.format(
            signature))
    node = Node((float(x), float(y), float(z)), node_class, norm,
                float(np.linalg.det(hess)), signature)
    node_certified.send(node)
    return node


def enumerate_nodes(s):
    """All real nodes of a separable surface, certified.

    A node pairs a critical point of the xy-part with a critical point of
    the z-part whose values sum to zero, within ``NODAL_LEVEL_TOLERANCE``
    relative to ``lambda`` for the unnormalized surfaces.

    :returns: ``(nodes, report)``; nodes are sorted by location.
    :raises CertificationError: if a candidate fails certification.
    """
    tol = scaled_tolerance(get_config('NODAL_LEVEL_TOLERANCE'),
                           s.lambda_ or 0.0)
    xy_points = xy_critical_points(s)
    z_points = z_critical_points(s.z_part)
    candidates = []
    for cp in xy_points:
        for z, value, _ in z_points:
            if abs(cp.value + value) <= tol:
                candidates.append(((cp.location[0], cp.location[1], z),
                                   NODE_CLASSES[cp.morse]))
    nodes = parallel_map(lambda c: certify_node(s, *c), candidates)
    nodes.sort(key=lambda n: n.location)
    per_class = {}
    for node in nodes:
        per_class[node.node_class] = per_class.get(node.node_class, 0) + 1
    report = NodeCountReport(s.m, s.family, len(nodes),
                             node_count_formula(s.family, s.m), per_class)
    return nodes, report


def node_count_formula(family, m):
    """Closed-form number of real nodes.

    ``C(m,2) floor(m/2) + t floor((m-1)/2)`` where ``t`` is the number of
    triangles of ``Sigma_C`` (``1 + m(m-3)/3``) or ``Sigma_D``.
    """
    _check_family(family, m)
    if family in C_FAMILIES:
        triangles = 1 + m * (m - 3) // 3
    else:
        triangles = sigma_d_minima_count(m)
    return m * (m - 1) // 2 * (m // 2) + triangles * ((m - 1) // 2)


@dataclass(frozen=True)
class HypersurfaceCount(object):
    """Node counts of ``J(x0, x1) - J(x2, x3)`` and its Chmutov analogue."""

    m: int
    count_J: int
    count_Chmutov: int

    @property
    def excess(self):
        """``count_J - count_Chmutov``."""
        return self.count_J - self.count_Chmutov

    @property
    def expected_excess(self):
        """``3q(q-1)``."""
        q = self.m // 3
        return 3 * q * (q - 1)

    def __iter__(self):
        """Unpack as ``(count_J, count_Chmutov, excess)``."""
        return iter((self.count_J, self.count_Chmutov, self.excess))


def hypersurface_node_count(m, grid_n=None):
    """Count nodes of the mirror pair hypersurface and its Chmutov analogue.

    Nodes are pairs of critical points with equal values, so each count is
    the sum of squared level multiplicities of the measured spectra.

    :raises SpectrumUnavailableError: if a spectrum cannot be measured.
    """
    require_multiple_of_three(m)
    try:
        jc = critical_spectrum(normalized_JC(m), m, 'J_C')
        ff = critical_spectrum(folding_F(m), m, 'F', grid_n)
    except NodalError as exc:
        raise SpectrumUnavailableError(
            'No spectrum for m={0}: {1}'.format(m, exc))
    count_j = sum(n * n for _, n in jc.level_counts())
    count_f = sum(n * n for _, n in ff.level_counts())
    return HypersurfaceCount(m, count_j, count_f)


def mirror_nodes(nodes):
    """Node locations reflected by ``(x, y, z) -> (x, -y, z)``."""
    return sorted((x, -y, z) for x, y, z in (n.location for n in nodes))
