# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests for surfaces and node enumeration."""

from __future__ import absolute_import, print_function

import numpy as np
import pytest
from helpers import random_points

from nodal_surfaces.errors import CertificationError, DomainError
from nodal_surfaces.polynomials import UnivarPoly
from nodal_surfaces.signals import node_certified
from nodal_surfaces.surfaces import build_surface, certify_node, \
    enumerate_nodes, hypersurface_node_count, mirror_nodes, \
    mirror_surface, node_count_formula, z_critical_points


@pytest.fixture(scope='module')
def p_c6():
    """``P_6^C``."""
    return build_surface('P_C', 6)


@pytest.mark.parametrize('m,count', [(6, 59), (9, 220), (12, 581),
                                     (15, 1162), (18, 2105)])
def test_node_count_formula(m, count):
    """Closed-form counts of ``P_C``."""
    assert node_count_formula('P_C', m) == count


def test_node_count_formula_sigma_d():
    """``P_C`` beats ``P_SigmaD`` by ``floor((m-1)/2)`` nodes."""
    assert node_count_formula('P_SigmaD', 9) == 216
    assert node_count_formula('Chmutov', 9) == 216
    assert node_count_formula('P_SigmaD', 6) == 57
    for m in (6, 9, 12):
        assert node_count_formula('P_C', m) - \
            node_count_formula('P_SigmaD', m) == (m - 1) // 2


def test_enumerate_p_c6(p_c6):
    """Saddles meet ``T = -1`` levels, minima meet ``T = +1`` levels."""
    received = []

    def receiver(node, **kwargs):
        received.append(node)

    with node_certified.connected_to(receiver):
        nodes, report = enumerate_nodes(p_c6)
    assert report.matches
    assert report.enumerated == len(nodes) == 59
    assert report.per_class == {'vertex_type': 45, 'triangle_type': 14}
    assert len(received) == 59
    for node in nodes:
        assert node.signature in ((2, 1), (1, 2))
        assert abs(p_c6(*node.location)) < 1e-6
    assert [n.location for n in nodes] == sorted(n.location for n in nodes)
    assert report.to_dict()['formula'] == 59


def test_enumerate_p_c9():
    """``P_9^C`` has 220 real nodes."""
    _, report = enumerate_nodes(build_surface('P_C', 9))
    assert report.enumerated == report.formula == 220


@pytest.mark.slow
@pytest.mark.parametrize('m', [12, 15, 18])
def test_enumerate_large(m):
    """Published counts at higher degree."""
    _, report = enumerate_nodes(build_surface('P_C', m))
    assert report.matches


@pytest.mark.slow
@pytest.mark.parametrize('family', ['P_C', 'Q_C', 'Qbar_C'])
def test_enumerate_degree_18(family):
    """All three families reach 2105 nodes at ``m = 18``."""
    _, report = enumerate_nodes(build_surface(family, 18))
    assert report.enumerated == report.formula == 2105


@pytest.mark.parametrize('family', ['Q_C', 'Qbar_C'])
def test_enumerate_mirror_pair_m9(family):
    """The mirror pair reaches the ``P_9^C`` count."""
    _, report = enumerate_nodes(build_surface(family, 9))
    assert report.enumerated == report.formula == 220


@pytest.mark.slow
@pytest.mark.parametrize('family', ['Q_C', 'Qbar_C'])
@pytest.mark.parametrize('m', [12, 15])
def test_enumerate_mirror_pair_large(family, m):
    """Mirror pair counts at higher degree."""
    _, report = enumerate_nodes(build_surface(family, m))
    assert report.matches


def test_mirror_pair_nodes():
    """``Q_C`` and ``Qbar_C`` have mirrored nodes."""
    q = build_surface('Q_C', 6)
    qbar = mirror_surface(q)
    assert qbar.family == 'Qbar_C'
    q_nodes, q_report = enumerate_nodes(q)
    qbar_nodes, qbar_report = enumerate_nodes(qbar)
    assert q_report.matches and qbar_report.matches
    mirrored = np.array(mirror_nodes(q_nodes))
    expected = np.array([n.location for n in qbar_nodes])
    assert mirrored.shape == expected.shape
    dist = np.linalg.norm(mirrored[:, None, :] - expected[None, :, :],
                          axis=2)
    assert np.all(dist.min(axis=1) < 1e-6)
    assert np.all(dist.min(axis=0) < 1e-6)


@pytest.mark.parametrize('family', ['P_SigmaD', 'Chmutov'])
def test_sigma_d_families(family):
    """Unnormalized ``Sigma_D`` surfaces and Chmutov's."""
    s = build_surface(family, 6)
    _, report = enumerate_nodes(s)
    assert report.enumerated == report.formula == 57
    if family == 'P_SigmaD':
        assert s.lambda_ > 0


@pytest.mark.parametrize('family', ['P_SigmaD', 'Chmutov'])
@pytest.mark.parametrize('m', [3, 4, 5, 7, 8])
def test_sigma_d_families_range(family, m):
    """Enumeration meets the formula over the low degrees."""
    _, report = enumerate_nodes(build_surface(family, m))
    assert report.enumerated == report.formula


@pytest.mark.slow
@pytest.mark.parametrize('family', ['P_SigmaD', 'Chmutov'])
@pytest.mark.parametrize('m', [9, 10, 11, 12])
def test_sigma_d_families_large(family, m):
    """Enumeration meets the formula up to ``m = 12``."""
    _, report = enumerate_nodes(build_surface(family, m))
    assert report.enumerated == report.formula
    if m == 12:
        assert report.formula == 576


def test_sigma_d_cubic_surfaces():
    """At ``m = 3`` only the three saddle nodes remain."""
    assert node_count_formula('Chmutov', 3) == 3
    assert node_count_formula('P_SigmaD', 3) == 3
    for family in ('P_SigmaD', 'Chmutov'):
        _, report = enumerate_nodes(build_surface(family, 3))
        assert report.enumerated == 3
        assert report.per_class == {'vertex_type': 3}
    assert build_surface('P_SigmaD', 3).lambda_ == pytest.approx(1.0 / 48)


def test_assembled_polynomial(p_c6):
    """The coefficient cube evaluates like the separable form."""
    xs, ys = random_points(3, n=50)
    zs = np.linspace(-1, 1, 50)
    direct = p_c6(xs, ys, zs)
    assembled = p_c6.evaluate_assembled(xs, ys, zs)
    assert np.allclose(assembled, direct, rtol=1e-10, atol=1e-10)
    assert p_c6.assemble().shape == (7, 7, 7)



def test_certification_failure(p_c6):
    """A regular point is not a node."""
    with pytest.raises(CertificationError) as excinfo:
        certify_node(p_c6, (0.3, 0.1, 0.2), 'vertex_type')
    assert excinfo.value.point == (0.3, 0.1, 0.2)


@pytest.mark.parametrize('family,m', [('P_C', 7), ('X', 6), ('Q_C', 4),
                                      ('P_SigmaD', 2), ('Chmutov', 19)])
def test_domain(family, m):
    """Unsupported families and degrees."""
    with pytest.raises(DomainError):
        build_surface(family, m)


def test_mirror_surface_domain(p_c6):
    """Only ``Q_C`` and ``Qbar_C`` form a mirror pair."""
    with pytest.raises(DomainError):
        mirror_surface(p_c6)


def test_z_critical_points():
    """Constant z-parts have no critical points."""
    with pytest.raises(DomainError):
        z_critical_points(UnivarPoly([2.0]))
    found = z_critical_points(UnivarPoly([0.0, 0.0, 1.0]))
    assert found == [(0.0, 0.0, 'min')]


def test_hypersurface_count():
    """Nodes of ``J_6(x0, x1) - J_6(x2, x3)`` and Chmutov's analogue."""
    count = hypersurface_node_count(6)
    assert tuple(count) == (283, 277, 6)
    assert count.expected_excess == 6


@pytest.mark.slow
def test_hypersurface_count_m9():
    """Excess ``3q(q-1) = 18`` at ``m = 9``."""
    count = hypersurface_node_count(9)
    assert count.excess == count.expected_excess == 18
