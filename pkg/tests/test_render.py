# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests for images and meshes."""

from __future__ import absolute_import, print_function

import os
from dataclasses import replace

import numpy as np
import pytest

from nodal_surfaces.arrangements import sigma, triangular_faces
from nodal_surfaces.errors import DomainError, EmptyMeshWarning
from nodal_surfaces.polynomials import BivarPoly, UnivarPoly, \
    expand_sigma_poly
from nodal_surfaces.render import RenderConfig, arrangement_window, \
    bounded_black_components, encode_pgm, encode_ppm, export_mesh, \
    nearest_distances, pixel_of, render_curve, render_lines, \
    render_sign_plot, render_surface, surface_window, write_pgm
from nodal_surfaces.surfaces import SurfaceSpec, build_surface, \
    enumerate_nodes

DISK = BivarPoly.from_terms({(2, 0): 1.0, (0, 2): 1.0, (0, 0): -0.25})


@pytest.fixture()
def sphere():
    """``x^2 + y^2 + z^2 - 1/4``."""
    return SurfaceSpec('P_C', 6, BivarPoly.from_terms({(2, 0): 1.0,
                                                       (0, 2): 1.0}),
                       UnivarPoly([-0.25, 0.0, 1.0]))


def test_config_defaults():
    """Sizes default to the configuration."""
    cfg = RenderConfig()
    assert (cfg.width, cfg.height) == (256, 256)
    assert cfg.samples == 192
    assert cfg.resolution == 64


@pytest.mark.parametrize('kwargs', [
    {'mode': 'ascii'},
    {'width': 8},
    {'window': (1.0, -1.0, 0.0, 1.0)},
    {'resolution': 1},
    {'resolution': 1024},
])
def test_config_validation(kwargs):
    """Invalid settings are rejected."""
    with pytest.raises(DomainError):
        RenderConfig(**kwargs)


def test_sign_plot_disk():
    """A disk is one bounded black region."""
    cfg = RenderConfig(width=64, height=64, window=(-1.0, 1.0, -1.0, 1.0))
    image = render_sign_plot(DISK, cfg)
    assert image.shape == (64, 64)
    assert image.dtype == np.uint8
    assert set(np.unique(image)) == {0, 255}
    assert image[32, 32] == 0 and image[0, 0] == 255
    assert bounded_black_components(image) == 1


def test_sign_plot_markers():
    """Markers are gray squares."""
    cfg = RenderConfig(width=64, height=64, window=(-1.0, 1.0, -1.0, 1.0),
                       markers=((0.0, 0.0),))
    image = render_sign_plot(DISK, cfg)
    assert image[32, 32] == 128
    with pytest.raises(DomainError):
        render_sign_plot(DISK, RenderConfig())


@pytest.mark.parametrize('m,expected', [(6, 7), (9, 19)])
def test_sign_plot_triangles(m, expected):
    """Each triangle of ``Sigma_C`` is its own bounded black region."""
    arr = sigma('C', m)
    cfg = RenderConfig(width=1024, height=1024,
                       window=arrangement_window(arr))
    image = render_sign_plot(expand_sigma_poly(arr), cfg)
    _, triangles = triangular_faces(arr)
    seeds = [b for _, b in triangles]
    assert bounded_black_components(image, cfg, seeds) == expected


def test_black_components_specks():
    """Specks left by the erosion are not regions."""
    cfg = RenderConfig(width=64, height=64, window=(-1.0, 1.0, -1.0, 1.0))
    image = render_sign_plot(DISK, cfg)
    image[5:8, 5:8] = 0
    assert bounded_black_components(image) == 1
    assert bounded_black_components(image, min_area=1) == 2
    assert bounded_black_components(image, cfg, [(0.0, 0.0)]) == 1
    assert bounded_black_components(image, cfg, [(0.9, -0.9)]) == 0
    assert pixel_of(cfg, 0.0, 0.0) == (32, 32)
    assert pixel_of(cfg, 5.0, -5.0) == (63, 63)


def test_render_lines():
    """Later groups paint over earlier ones."""
    cfg = RenderConfig(width=40, height=40, window=(-1.0, 1.0, -1.0, 1.0))
    image = render_lines([([(1.0, 0.0, 0.0)], 0),
                          ([(0.0, 1.0, -0.5)], 96)], cfg)
    assert image[pixel_of(cfg, 0.0, -0.5)] == 0
    assert image[pixel_of(cfg, -0.5, 0.5)] == 96
    assert image[pixel_of(cfg, 0.0, 0.5)] == 96
    assert image[0, 0] == 255
    with pytest.raises(DomainError):
        render_lines([], RenderConfig(width=16, height=16))


def test_render_curve():
    """Graph of ``z^2`` with a level row."""
    cfg = RenderConfig(width=40, height=40, window=(-1.0, 1.0, -0.5, 1.5))
    image = render_curve(UnivarPoly([0.0, 0.0, 1.0]), cfg, levels=(0.5,))
    assert (image == 0).any(axis=0).all()
    assert image[29, 19] == 0 and image[29, 20] == 0
    assert image[20, 0] == 176 and image[20, 20] == 176
    assert image[39, 0] == 255


def test_image_encoding(out_dir):
    """Binary PGM and PPM headers."""
    gray = np.zeros((20, 16), dtype=np.uint8)
    data = encode_pgm(gray)
    assert data.startswith(b'P5\n16 20\n255\n')
    assert len(data) == len(b'P5\n16 20\n255\n') + 320
    color = np.zeros((20, 16, 3), dtype=np.uint8)
    assert encode_ppm(color).startswith(b'P6\n16 20\n255\n')
    path = os.path.join(out_dir, 'gray.pgm')
    write_pgm(path, gray)
    with open(path, 'rb') as fp:
        assert fp.read() == data


def test_raymarch_sphere(sphere):
    """The sphere shows its front side in a disk of radius 1/2."""
    cfg = RenderConfig(width=64, height=64, mode='raymarch')
    image = render_surface(sphere, cfg)
    assert image.shape == (64, 64, 3)
    assert surface_window(sphere) == (-1.0, 1.0, -1.0, 1.0)
    assert tuple(image[0, 0]) == (255, 255, 255)
    assert tuple(image[32, 32]) != (255, 255, 255)
    assert image[32, 32, 0] > image[32, 32, 2]


def test_raymarch_mirror_pair():
    """``Q_6^C`` and ``Qbar_6^C`` render as mirror images."""
    cfg = RenderConfig(width=128, height=128, mode='raymarch')
    q = render_surface(build_surface('Q_C', 6), cfg)
    qbar = render_surface(build_surface('Qbar_C', 6), cfg)
    differing = np.any(q != qbar[::-1], axis=2).mean()
    assert differing <= 0.005
    assert np.any(q != 255)


def test_mesh_sphere(sphere, out_dir):
    """Marching cubes gives a closed sphere."""
    mesh = export_mesh(sphere, RenderConfig(mode='mesh', resolution=32))
    assert not mesh.empty
    assert mesh.euler_characteristic() == 2
    radii = np.linalg.norm(mesh.vertices, axis=1)
    assert np.allclose(radii, 0.5, atol=0.05)
    assert np.allclose(nearest_distances(mesh.vertices[:5], mesh), 0.0)
    path = os.path.join(out_dir, 'sphere.obj')
    mesh.write_obj(path)
    with open(path) as fp:
        content = fp.read()
    assert content.count('\nf ') + content.startswith('f ') == len(mesh)


def test_mesh_surface():
    """Meshes of the node surfaces are not empty."""
    mesh = export_mesh(build_surface('P_C', 6),
                       RenderConfig(mode='mesh', resolution=24))
    assert len(mesh) > 0


def test_empty_mesh():
    """A surface without real points gives a warning."""
    s = SurfaceSpec('P_C', 6, BivarPoly.from_terms({(2, 0): 1.0,
                                                    (0, 2): 1.0}),
                    UnivarPoly([1.0, 0.0, 1.0]))
    with pytest.warns(EmptyMeshWarning):
        mesh = export_mesh(s, RenderConfig(mode='mesh', resolution=16))
    assert mesh.empty
    assert mesh.euler_characteristic() == 0


def test_mesh_reaches_nodes():
    """The ``P_9^C`` mesh passes within two grid cells of every node."""
    s = build_surface('P_C', 9)
    nodes, _ = enumerate_nodes(s)
    locations = np.array([n.location for n in nodes])
    reach = np.linalg.norm(locations - np.array(s.center), axis=1).max()
    s = replace(s, radius=max(s.radius, 1.05 * reach))
    mesh = export_mesh(s, RenderConfig(mode='mesh', resolution=128))
    cell = 2.0 * s.radius / 128
    assert len(locations) == 220
    assert np.all(nearest_distances(locations, mesh) <= 2 * cell)
