# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests for the regression suite."""

from __future__ import absolute_import, print_function

import pytest

from nodal_surfaces.errors import DomainError, SpectrumViolationError
from nodal_surfaces.signals import verification_checked
from nodal_surfaces.verification import CHECKS, check_extrema_census, \
    check_identities, check_mirror_nodes, check_round_trip, \
    check_triangle_census, run_check, run_suite


def test_suite_m6(app):
    """Every check applicable at ``m = 6`` passes."""
    report = run_suite(6)
    assert report.passed, report.failed()
    names = [c.name for c in report.checks]
    assert 'catalog' not in names
    assert len(names) == len(CHECKS) - 1
    assert report.errata == []


def test_lambda_erratum():
    """The published ``lambda_9`` is reported, not failed."""
    report = run_suite(9, ['lambda'])
    check, = report.checks
    assert check.passed
    erratum, = check.errata
    assert erratum.name == 'lambda_9'
    assert erratum.printed == pytest.approx(11.5761, rel=1e-4)
    assert erratum.direct == pytest.approx(13.2861, rel=1e-4)
    assert erratum.interpolated == pytest.approx(erratum.direct, rel=1e-6)
    assert report.errata == [erratum]


def test_catalog_check():
    """The rotation catalog runs at ``m = 9`` only."""
    report = run_suite(9, ['catalog', 'printed_coefficients'])
    assert [c.name for c in report.checks] == ['printed_coefficients',
                                               'catalog']
    assert report.passed
    assert run_suite(6, ['catalog']).checks == ()


@pytest.mark.parametrize('check', [check_triangle_census,
                                   check_extrema_census, check_identities])
def test_checks_m9(check):
    """Census and identity checks at ``m = 9``."""
    passed, detail, errata = check(9)
    assert passed, detail
    assert errata == ()


def test_round_trip_seeds():
    """Any seed gives an exact round trip."""
    for seed in (0, 7):
        passed, _, _ = check_round_trip(6, seed=seed)
        assert passed


def test_mirror_nodes_m6():
    """``Q_6^C`` and ``Qbar_6^C`` nodes are mirror images."""
    passed, detail, _ = check_mirror_nodes(6)
    assert passed, detail


def test_failed_check_is_announced():
    """Errors turn into failed checks and are sent."""
    received = []

    def receiver(payload, **kwargs):
        received.append(payload)

    def broken(m):
        raise SpectrumViolationError((0.0, 0.0), 1.0)

    with verification_checked.connected_to(receiver):
        check = run_check('broken', broken, 6)
    assert not check.passed
    assert check.detail.startswith('SpectrumViolationError')
    assert received == [check.to_dict()]
    assert received[0]['errata'] == []


def test_suite_domain():
    """Degrees must be multiples of three."""
    with pytest.raises(DomainError):
        run_suite(7)


@pytest.mark.slow
@pytest.mark.parametrize('m', [12, 15, 18])
def test_suite_large(m):
    """Counts and published values at higher degree."""
    report = run_suite(m)
    assert report.passed, report.failed()
