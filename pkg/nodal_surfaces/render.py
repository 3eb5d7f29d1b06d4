# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sign plots, line drawings, curves, raymarched views and meshes.

Images are plain ``numpy`` arrays written as binary PGM (``P5``) or PPM
(``P6``); meshes go through ``mcubes``.
"""

from __future__ import absolute_import, print_function

import warnings
from dataclasses import dataclass, field

import mcubes
import numpy as np
from scipy import ndimage
from scipy.spatial import cKDTree

from .arrangements import vertices
from .errors import DomainError, EmptyMeshWarning
from .utils import get_config

MODES = ('sign_plot', 'raymarch', 'mesh')

LIGHT = np.array([-0.45, 0.0, 0.89])
"""Light direction; it has no image-vertical component so mirrored
surfaces give mirrored images."""

FRONT = np.array([245.0, 200.0, 60.0])
BACK = np.array([90.0, 140.0, 220.0])
BACKGROUND = 255


@dataclass(frozen=True)
class RenderConfig(object):
    """Image or mesh settings.

    ``window`` is ``(xmin, xmax, ymin, ymax)`` for images; meshes use the
    clip sphere of the surface and read ``resolution``.
    """

    width: int = None
    height: int = None
    window: tuple = None
    mode: str = 'sign_plot'
    iso: float = 0.0
    samples: int = None
    resolution: int = None
    markers: tuple = field(default=())

    def __post_init__(self):
        """Fill defaults from the configuration and validate."""
        size = get_config('NODAL_RENDER_SIZE')
        for name, default in (('width', size), ('height', size),
                              ('samples',
                               get_config('NODAL_RENDER_SAMPLES')),
                              ('resolution',
                               get_config('NODAL_MESH_RESOLUTION'))):
            if getattr(self, name) is None:
                object.__setattr__(self, name, default)
        if self.mode not in MODES:
            raise DomainError({'mode': self.mode})
        if self.width < 16 or self.height < 16:
            raise DomainError({'width': self.width, 'height': self.height})
        if self.window is not None:
            lows, highs = self.window[0::2], self.window[1::2]
            if any(lo >= hi for lo, hi in zip(lows, highs)):
                raise DomainError({'window': self.window})
        if not 2 <= self.resolution <= \
                get_config('NODAL_MESH_MAX_RESOLUTION'):
            raise DomainError({'resolution': self.resolution})


def pixel_centers(cfg, window):
    """Pixel center coordinates; row 0 is the top of the image.

    Coordinates are symmetric about the window center so that flipping the
    rows mirrors ``y`` exactly.
    """
    xmin, xmax, ymin, ymax = window
    dx = (xmax - xmin) / cfg.width
    dy = (ymax - ymin) / cfg.height
    cx, cy = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)
    xs = cx + (np.arange(cfg.width) - cfg.width / 2.0 + 0.5) * dx
    ys = cy + (cfg.height / 2.0 - np.arange(cfg.height) - 0.5) * dy
    return np.meshgrid(xs, ys)


def arrangement_window(arr, pad=0.1):
    """Square window around all vertices of an arrangement."""
    locs = vertices(arr).locations()
    lo, hi = locs.min(axis=0), locs.max(axis=0)
    half = 0.5 * (hi - lo).max() * (1.0 + 2 * pad)
    mid = 0.5 * (lo + hi)
    return (mid[0] - half, mid[0] + half, mid[1] - half, mid[1] + half)


def surface_window(s):
    """Square window enclosing the clip sphere of a surface."""
    cx, cy, _ = s.center
    r = s.radius
    return (cx - r, cx + r, cy - r, cy + r)


def pixel_of(cfg, x, y):
    """Pixel ``(row, col)`` holding a point, clamped to the image."""
    xmin, xmax, ymin, ymax = cfg.window
    col = int((x - xmin) / (xmax - xmin) * cfg.width)
    row = int((ymax - y) / (ymax - ymin) * cfg.height)
    return (min(max(row, 0), cfg.height - 1),
            min(max(col, 0), cfg.width - 1))


def _draw_markers(image, cfg, gray=128):
    for mx, my in cfg.markers:
        row, col = pixel_of(cfg, mx, my)
        image[max(row - 1, 0):row + 2, max(col - 1, 0):col + 2] = gray


def render_sign_plot(p, cfg):
    """Black where ``p < iso``, white elsewhere.

    Markers are drawn as 3x3 gray squares.

    :returns: ``(height, width)`` ``uint8`` array.
    """
    if cfg.window is None:
        raise DomainError({'window': None})
    xs, ys = pixel_centers(cfg, cfg.window)
    image = np.where(p(xs, ys) < cfg.iso, 0, 255).astype(np.uint8)
    _draw_markers(image, cfg)
    return image


def render_lines(groups, cfg, stroke=1.5):
    """Draw lines ``ax x + ay y + a0 = 0`` on a white image.

    :param groups: ``(factors, gray)`` pairs; later groups paint over
        earlier ones.
    :param stroke: line width in pixels.
    :returns: ``(height, width)`` ``uint8`` array.
    """
    if cfg.window is None:
        raise DomainError({'window': None})
    xs, ys = pixel_centers(cfg, cfg.window)
    xmin, xmax, ymin, ymax = cfg.window
    half = 0.5 * stroke * max((xmax - xmin) / cfg.width,
                              (ymax - ymin) / cfg.height)
    image = np.full((cfg.height, cfg.width), BACKGROUND, dtype=np.uint8)
    for factors, gray in groups:
        for ax, ay, a0 in factors:
            norm = np.hypot(ax, ay)
            image[np.abs(ax * xs + ay * ys + a0) <= half * norm] = gray
    _draw_markers(image, cfg)
    return image


def render_curve(g, cfg, levels=()):
    """Graph of a univariate polynomial.

    The window is ``(zmin, zmax, vmin, vmax)``. Gray rows mark ``levels``.
    Consecutive columns of the black graph are joined by vertical runs so
    that steep parts stay connected.

    :returns: ``(height, width)`` ``uint8`` array.
    """
    if cfg.window is None:
        raise DomainError({'window': None})
    xs, _ = pixel_centers(cfg, cfg.window)
    _, _, vmin, vmax = cfg.window
    image = np.full((cfg.height, cfg.width), BACKGROUND, dtype=np.uint8)
    for level in levels:
        if vmin <= level <= vmax:
            image[pixel_of(cfg, cfg.window[0], level)[0], :] = 176
    rows = np.clip((vmax - g(xs[0])) / (vmax - vmin) * cfg.height,
                   -1.0, cfg.height)
    ends = np.append(rows[1:], rows[-1])
    for col, (a, b) in enumerate(zip(rows, ends)):
        lo, hi = int(np.floor(min(a, b))), int(np.floor(max(a, b)))
        if hi < 0 or lo >= cfg.height:
            continue
        image[max(lo, 0):min(hi, cfg.height - 1) + 1, col] = 0
    _draw_markers(image, cfg)
    return image


def bounded_black_components(image, cfg=None, seeds=(), min_area=16):
    """Number of black regions not touching the image border.

    The black mask is eroded once so that regions meeting at a vertex
    separate; components use 4-connectivity. Erosion leaves specks where
    a region pinches, so components smaller than ``min_area`` pixels are
    dropped. With ``seeds``, points mapped through ``cfg``, only the
    distinct components under a seed count.
    """
    black = ndimage.binary_erosion(image == 0)
    labels, count = ndimage.label(black)
    border = set(np.unique(np.concatenate(
        [labels[0], labels[-1], labels[:, 0], labels[:, -1]])))
    if len(seeds):
        hits = set(labels[pixel_of(cfg, x, y)] for x, y in seeds)
        return sum(1 for k in hits if k and k not in border)
    areas = ndimage.sum_labels(black, labels, np.arange(1, count + 1))
    return sum(1 for k, area in enumerate(areas, 1)
               if k not in border and area >= min_area)


def render_surface(s, cfg):
    """Sphere-clipped raymarch of a separable surface.

    Orthographic rays travel along ``-z``. The first sign change inside the
    clip sphere is refined by bisection and shaded from the normal.

    :returns: ``(height, width, 3)`` ``uint8`` array.
    """
    window = cfg.window or surface_window(s)
    cx, cy, cz = s.center
    r = s.radius
    xs, ys = pixel_centers(cfg, window)
    chord2 = r * r - (xs - cx) ** 2 - (ys - cy) ** 2
    zs = cz + r - (np.arange(cfg.samples) + 0.5) * (2.0 * r / cfg.samples)
    inside = chord2[:, :, None] >= (zs - cz)[None, None, :] ** 2
    values = s.xy_part(xs, ys)[:, :, None] + s.z_part(zs)[None, None, :] - \
        cfg.iso
    cross = inside[:, :, :-1] & inside[:, :, 1:] & \
        (np.sign(values[:, :, :-1]) != np.sign(values[:, :, 1:]))
    hit = cross.any(axis=2)
    first = np.argmax(cross, axis=2)

    image = np.full((cfg.height, cfg.width, 3), BACKGROUND, dtype=np.uint8)
    if not hit.any():
        return image
    rows, cols = np.nonzero(hit)
    k = first[rows, cols]
    hx, hy = xs[rows, cols], ys[rows, cols]
    xy_vals = s.xy_part(hx, hy) - cfg.iso
    top, bottom = zs[k], zs[k + 1]
    ftop = xy_vals + s.z_part(top)
    for _ in range(get_config('NODAL_BISECTION_STEPS')):
        mid = 0.5 * (top + bottom)
        fmid = xy_vals + s.z_part(mid)
        same = np.sign(fmid) == np.sign(ftop)
        top = np.where(same, mid, top)
        ftop = np.where(same, fmid, ftop)
        bottom = np.where(same, bottom, mid)
    hz = 0.5 * (top + bottom)
    grad = s.xy_part.gradient(hx, hy)
    normal = np.stack([grad[0], grad[1], s.z_part.deriv()(hz)], axis=-1)
    length = np.linalg.norm(normal, axis=-1, keepdims=True)
    normal = normal / np.where(length > 0, length, 1.0)
    facing = normal[:, 2] >= 0
    lambert = np.abs(normal.dot(LIGHT))
    shade = (0.25 + 0.75 * lambert)[:, None]
    color = np.where(facing[:, None], FRONT, BACK) * shade
    image[rows, cols] = np.clip(np.rint(color), 0, 255).astype(np.uint8)
    return image


@dataclass(frozen=True, eq=False)
class Mesh(object):
    """Triangle mesh with welded vertices."""

    vertices: np.ndarray
    faces: np.ndarray

    def __len__(self):
        """Number of faces."""
        return len(self.faces)

    @property
    def empty(self):
        """Tell if the mesh has no face."""
        return len(self.faces) == 0

    def euler_characteristic(self):
        """``V - E + F``."""
        if self.empty:
            return 0
        edges = np.sort(np.concatenate([self.faces[:, [0, 1]],
                                        self.faces[:, [1, 2]],
                                        self.faces[:, [2, 0]]]), axis=1)
        n_edges = len(np.unique(edges, axis=0))
        n_vertices = len(np.unique(self.faces))
        return n_vertices - n_edges + len(self.faces)

    def write_obj(self, path):
        """Write ``v`` and ``f`` records."""
        mcubes.export_obj(self.vertices, self.faces, str(path))


def _weld(verts, faces, decimals=9):
    keys = np.round(verts, decimals)
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    faces = inverse.reshape(-1)[faces]
    keep = (faces[:, 0] != faces[:, 1]) & (faces[:, 1] != faces[:, 2]) & \
        (faces[:, 0] != faces[:, 2])
    faces = faces[keep]
    used, remap = np.unique(faces, return_inverse=True)
    return uniq[used], remap.reshape(-1, 3)


def export_mesh(s, cfg):
    """Marching cubes triangulation of the zero set inside the clip sphere.

    Grid samples sit at cell centers of a cube around the sphere; faces
    whose centroid leaves the sphere are dropped.

    :rtype: :py:class:`Mesh`; empty with an :py:class:`EmptyMeshWarning`
        when the zero set misses the sphere.
    """
    res = cfg.resolution
    cx, cy, cz = s.center
    r = s.radius
    step = 2.0 * r / res
    offsets = -r + (np.arange(res) + 0.5) * step
    xs, ys, zs = cx + offsets, cy + offsets, cz + offsets
    gx, gy = np.meshgrid(xs, ys, indexing='ij')
    volume = s.xy_part(gx, gy)[:, :, None] + s.z_part(zs)[None, None, :] - \
        cfg.iso
    verts, faces = mcubes.marching_cubes(volume, 0.0)
    empty = Mesh(np.zeros((0, 3)), np.zeros((0, 3), dtype=int))
    if len(faces) == 0:
        warnings.warn('Zero set does not meet the window', EmptyMeshWarning)
        return empty
    world = np.array([cx, cy, cz]) - r + (verts + 0.5) * step
    faces = np.asarray(faces, dtype=int)
    centroids = world[faces].mean(axis=1)
    keep = np.linalg.norm(centroids - np.array(s.center), axis=1) <= r
    if not keep.any():
        warnings.warn('Zero set does not meet the clip sphere',
                      EmptyMeshWarning)
        return empty
    world, faces = _weld(world, faces[keep])
    return Mesh(world, faces)


def nearest_distances(points, mesh):
    """Distance from each point to the closest mesh vertex."""
    tree = cKDTree(mesh.vertices)
    dist, _ = tree.query(np.asarray(points, dtype=float).reshape(-1, 3))
    return dist


def write_pgm(path, image):
    """Write a binary ``P5`` image."""
    with open(str(path), 'wb') as fp:
        fp.write(encode_pgm(image))


def write_ppm(path, image):
    """Write a binary ``P6`` image."""
    with open(str(path), 'wb') as fp:
        fp.write(encode_ppm(image))


def encode_pgm(image):
    """``P5`` bytes of a grayscale image."""
    height, width = image.shape
    return 'P5\n{0} {1}\n255\n'.format(width, height).encode('ascii') + \
        np.ascontiguousarray(image, dtype=np.uint8).tobytes()


def encode_ppm(image):
    """``P6`` bytes of a color image."""
    height, width, _ = image.shape
    return 'P6\n{0} {1}\n255\n'.format(width, height).encode('ascii') + \
        np.ascontiguousarray(image, dtype=np.uint8).tobytes()
