# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Command line interface.

Every command runs inside the context of a minimal application created by
:py:func:`nodal_surfaces.ext.create_app`; ``--tolerance`` and
``--precision`` override ``NODAL_VERTEX_TOLERANCE`` and ``NODAL_PRECISION``.
Without ``--out`` the main document is printed, with ``--out DIR`` all
artifacts are written as a bundle by ``NODAL_BUNDLE_WRITER``.

Exit codes: ``0`` success, ``1`` failed verification or count mismatch,
``2`` usage error.
"""

from __future__ import absolute_import, print_function

import functools
import logging
import os
import tempfile

import click
from flask import current_app, has_app_context

from .arrangements import lbar_set, prototiles, sigma, triangular_faces, \
    vertices
from .critical import JC_LEVELS, candidate_maxima, candidate_minima, \
    critical_spectrum
from .errors import DomainError, NodalError
from .ext import create_app
from .polynomials import build_Jbar, critical_points_1d, folding_F, \
    normalized_JC, rotated_restriction, sigma_d_poly
from .proxies import current_nodal
from .render import MODES, RenderConfig, arrangement_window, encode_pgm, \
    encode_ppm, export_mesh, render_curve, render_lines, render_sign_plot, \
    render_surface, surface_window
from .serializers import arrangement_to_json, critical_points_to_csv, \
    extrema_to_csv, node_report_to_json, nodes_to_csv, polynomial_to_json, \
    prototiles_to_csv, rows_to_csv, spectrum_to_json, triangles_to_csv, \
    vertices_to_csv
from .signals import bundle_writer_status, critical_point_polished, \
    node_certified, verification_checked
from .surfaces import FAMILIES, build_surface, enumerate_nodes, \
    hypersurface_node_count
from .verification import CHECKS, run_suite
from .writers import Artifact

KINDS = ('J_C', 'Jbar_C', 'J_SigmaD', 'F')

POLYNOMIALS = {
    'J_C': normalized_JC,
    'Jbar_C': build_Jbar,
    'J_SigmaD': sigma_d_poly,
    'F': folding_F,
}


#
# Signal receivers
#
def _logger():
    return current_app.logger if has_app_context() else None


def log_polished(cp, **kwargs):
    """Debug line per polished critical point."""
    logger = _logger()
    if logger:
        logger.debug('critical point %s value=%.12g %s', cp.location,
                     cp.value, cp.morse)


def log_node(node, **kwargs):
    """Debug line per certified node."""
    logger = _logger()
    if logger:
        logger.debug('node %s %s', node.location, node.node_class)


def log_check(check, **kwargs):
    """Info line per check, warning per erratum."""
    logger = _logger()
    if not logger:
        return
    logger.info('m=%d %s %s: %s', check['degree'], check['name'],
                'passed' if check['passed'] else 'FAILED', check['detail'])
    for erratum in check['errata']:
        logger.warning(
            'erratum %s[%d]: printed %.17g, direct %.17g, interpolated '
            '%.17g', erratum['name'], erratum['index'], erratum['printed'],
            erratum['direct'], erratum['interpolated'])


def log_written(status, **kwargs):
    """Debug line per written bundle file."""
    logger = _logger()
    if logger:
        logger.debug('wrote %s (%d/%d)', status['current_filename'],
                     status['written_files'], status['total_files'])


def connect_receivers():
    """Route the module signals to ``current_app.logger``."""
    critical_point_polished.connect(log_polished)
    node_certified.connect(log_node)
    verification_checked.connect(log_check)
    bundle_writer_status.connect(log_written)


#
# Option helpers
#
def _parse_window(ctx, param, value):
    if value is None:
        return None
    try:
        window = tuple(float(v) for v in value.split(','))
    except ValueError:
        raise click.BadParameter('expected four comma separated numbers')
    if len(window) != 4 or window[0] >= window[1] or window[2] >= window[3]:
        raise click.BadParameter('expected xmin,xmax,ymin,ymax')
    return window


def degree_option(required=True):
    """``--degree`` option."""
    return click.option('--degree', '-m', type=int, required=required,
                        help='Degree m of the construction.')


def common_options(func):
    """``--out``, ``--tolerance``, ``--precision``, ``--seed``, ``-v``."""
    @click.option('--out', type=click.Path(file_okay=False),
                  help='Write a bundle into this directory.')
    @click.option('--tolerance', type=float,
                  help='Vertex and concurrence clustering tolerance.')
    @click.option('--precision', type=click.Choice(['double',
                                                    'compensated']),
                  help='Accumulation mode of polynomial expansion.')
    @click.option('--seed', type=int, default=0, show_default=True,
                  help='Seed of randomized checks.')
    @click.option('--verbose', '-v', count=True,
                  help='Log checks (-v) or every point (-vv).')
    @functools.wraps(func)
    def wrapper(out, tolerance, precision, seed, verbose, **kwargs):
        overrides = {}
        if tolerance is not None:
            overrides['NODAL_VERTEX_TOLERANCE'] = tolerance
        if precision is not None:
            overrides['NODAL_PRECISION'] = precision
        app = create_app(**overrides)
        if verbose:
            app.logger.setLevel(logging.DEBUG if verbose > 1
                                else logging.INFO)
        with app.app_context():
            try:
                code = func(out=out, seed=seed, **kwargs)
            except DomainError as exc:
                raise click.UsageError(
                    'Unsupported parameters: {0}'.format(exc.params))
            except NodalError as exc:
                click.echo('{0}: {1}'.format(exc.__class__.__name__, exc),
                           err=True)
                code = 1
        if code:
            raise click.exceptions.Exit(code)
    return wrapper


def emit(out, artifacts, document=None):
    """Write ``artifacts`` as a bundle or echo ``document``."""
    if out:
        writer = current_nodal.bundle_writer(out, artifacts)
        writer.write_all_files()
        click.echo('Wrote {0} artifact(s) to {1}'.format(len(artifacts),
                                                         out))
    elif document is not None:
        click.echo(document, nl=False)


def _factors(arr):
    return [line.linear_coefficients() for line in arr.lines]


#
# Commands
#
@click.group()
def cli():
    """Real algebraic surfaces with many nodes."""
    connect_receivers()


@cli.command()
@click.option('--family', type=click.Choice(FAMILIES), default='P_C',
              show_default=True)
@degree_option()
@click.option('--part', type=click.Choice(['xy', 'z']), default='xy',
              show_default=True, help='Part echoed without --out.')
@common_options
def build(family, degree, part, out, seed):
    """Emit the polynomials of a surface as JSON."""
    s = build_surface(family, degree)
    documents = {'xy': polynomial_to_json(s.xy_part),
                 'z': polynomial_to_json(s.z_part)}
    emit(out, [Artifact('xy-part', 'json', documents['xy'], family, degree),
               Artifact('z-part', 'json', documents['z'], family, degree)],
         documents[part])


@cli.command()
@click.option('--system', type=click.Choice(['C', 'D']), default='C',
              show_default=True)
@degree_option()
@common_options
def arrange(system, degree, out, seed):
    """Vertex and triangle census of Sigma_C or Sigma_D."""
    arr = sigma(system, degree)
    report = vertices(arr)
    count, triangles = triangular_faces(arr)
    tiles = prototiles(arr)
    summary = 'system Sigma_{0} m={1} lines={2} vertices={3} simple={4} ' \
        'triangles={5} prototiles={6}\n'.format(
            system, degree, len(arr), len(report.points), report.simple,
            count, len(tiles))
    family = 'Sigma_{0}'.format(system)
    emit(out, [
        Artifact('arrangement', 'json', arrangement_to_json(arr), family,
                 degree),
        Artifact('vertices', 'csv', vertices_to_csv(report), family, degree),
        Artifact('triangles', 'csv', triangles_to_csv(triangles), family,
                 degree),
        Artifact('prototiles', 'csv', prototiles_to_csv(tiles), family,
                 degree),
    ], summary)


@cli.command()
@click.option('--kind', type=click.Choice(KINDS), default='J_C',
              show_default=True)
@degree_option()
@common_options
def critical(kind, degree, out, seed):
    """Critical spectrum of J_C, Jbar_C, J_SigmaD or F."""
    spectrum = critical_spectrum(POLYNOMIALS[kind](degree), degree, kind)
    document = spectrum_to_json(spectrum)
    emit(out, [
        Artifact('spectrum', 'json', document, kind, degree),
        Artifact('critical-points', 'csv',
                 critical_points_to_csv(spectrum.points), kind, degree),
    ], document)


@cli.command()
@click.option('--family', type=click.Choice(FAMILIES), default='P_C',
              show_default=True)
@degree_option()
@common_options
def nodes(family, degree, out, seed):
    """Enumerate and certify the real nodes of a surface."""
    found, report = enumerate_nodes(build_surface(family, degree))
    document = node_report_to_json(report)
    emit(out, [
        Artifact('nodes', 'csv', nodes_to_csv(found), family, degree),
        Artifact('node-report', 'json', document, family, degree),
    ], document)
    return 0 if report.matches else 1


@cli.command()
@degree_option()
@click.option('--check', 'checks', multiple=True,
              type=click.Choice([name for name, _, _ in CHECKS]),
              help='Run only these checks.')
@common_options
def verify(degree, checks, out, seed):
    """Run the regression suite for one degree."""
    report = run_suite(degree, checks or None, seed=seed)
    rows = []
    for check in report.checks:
        click.echo('{0} {1}: {2}'.format(
            'PASS' if check.passed else 'FAIL', check.name, check.detail))
        for erratum in check.errata:
            click.echo('  erratum {0}[{1}]: printed {2!r}, direct {3!r}, '
                       'interpolated {4!r}'.format(
                           erratum.name, erratum.index, erratum.printed,
                           erratum.direct, erratum.interpolated))
        rows.append([check.name, check.passed, len(check.errata),
                     check.detail])
    if out:
        emit(out, [Artifact('verification', 'csv', rows_to_csv(
            ['check', 'passed', 'errata', 'detail'], rows), 'verify',
            degree)])
    return 0 if report.passed else 1


@cli.command()
@click.option('--family', type=click.Choice(FAMILIES), default='P_C',
              show_default=True)
@degree_option()
@click.option('--mode', type=click.Choice(MODES), default='sign_plot',
              show_default=True)
@click.option('--window', callback=_parse_window,
              help='xmin,xmax,ymin,ymax; defaults to the clip sphere.')
@click.option('--size', type=int, help='Image width and height.')
@click.option('--resolution', type=int, help='Marching cubes grid size.')
@common_options
def render(family, degree, mode, window, size, resolution, out, seed):
    """Sign plot (PGM), raymarch (PPM) or mesh (OBJ) of a surface."""
    if not out:
        raise click.UsageError('render needs --out')
    s = build_surface(family, degree)
    cfg = RenderConfig(width=size, height=size,
                       window=window or surface_window(s), mode=mode,
                       resolution=resolution)
    if mode == 'sign_plot':
        artifact = Artifact('sign-plot', 'pgm',
                            encode_pgm(render_sign_plot(s.xy_part, cfg)),
                            family, degree)
    elif mode == 'raymarch':
        artifact = Artifact('raymarch', 'ppm',
                            encode_ppm(render_surface(s, cfg)), family,
                            degree)
    else:
        mesh = export_mesh(s, cfg)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'mesh.obj')
            mesh.write_obj(path)
            with open(path, 'rb') as fp:
                artifact = Artifact('mesh', 'obj', fp.read(), family,
                                    degree)
    emit(out, [artifact])


@cli.command()
@click.option('--system', type=click.Choice(['C', 'D']), default='C',
              show_default=True)
@degree_option()
@click.option('--extrema', is_flag=True,
              help='Draw Jbar_m^C with the lines M_-1 and M_8 instead.')
@click.option('--window', callback=_parse_window,
              help='xmin,xmax,ymin,ymax; defaults around the vertices.')
@click.option('--size', type=int, help='Image width and height.')
@common_options
def draw(system, degree, extrema, window, size, out, seed):
    """Line drawing (PGM) of Sigma_C, Sigma_D or the extrema lines."""
    if not out:
        raise click.UsageError('draw needs --out')
    if extrema:
        if system != 'C':
            raise click.UsageError('--extrema needs --system C')
        base = lbar_set(degree, (1,))
        groups = [
            (_factors(lbar_set(degree, (4,), 'M_8')), 176),
            (_factors(lbar_set(degree, (0, 2), 'M_minus1')), 96),
            (_factors(base), 0),
        ]
        markers = candidate_minima(degree, mirror=False) + \
            candidate_maxima(degree, mirror=False)
        family = 'Jbar_C'
    else:
        base = sigma(system, degree)
        groups = [(_factors(base), 0)]
        markers = ()
        family = 'Sigma_{0}'.format(system)
    cfg = RenderConfig(width=size, height=size,
                       window=window or arrangement_window(base),
                       markers=tuple(markers))
    emit(out, [Artifact('lines', 'pgm', encode_pgm(render_lines(groups, cfg)),
                        family, degree)])


@cli.command()
@degree_option()
@click.option('--angle', type=float,
              help='Rotation angle in radians; defaults to the angle of '
                   'J_m^C itself.')
@click.option('--window', callback=_parse_window,
              help='zmin,zmax,vmin,vmax of the plot.')
@click.option('--size', type=int, help='Image width and height.')
@common_options
def restriction(degree, angle, window, size, out, seed):
    """Restriction of J_m^C to a rotated x-axis with its extrema."""
    g = rotated_restriction(degree, angle)
    points = critical_points_1d(g)
    document = extrema_to_csv(points)
    artifacts = [Artifact('restriction', 'csv', document, 'J_C', degree)]
    if out:
        if window is None:
            zs = [z for z, _, _ in points]
            pad = 0.1 * (max(zs) - min(zs))
            window = (min(zs) - pad, max(zs) + pad, -2.0, 9.0)
        cfg = RenderConfig(width=size, height=size, window=window,
                           markers=tuple((z, v) for z, v, _ in points))
        artifacts.append(Artifact(
            'restriction-plot', 'pgm',
            encode_pgm(render_curve(g, cfg, JC_LEVELS)), 'J_C', degree))
    emit(out, artifacts, document)


@cli.command()
@degree_option()
@common_options
def hyper(degree, out, seed):
    """Node counts of the mirror-pair hypersurface and Chmutov's."""
    count = hypersurface_node_count(degree)
    summary = 'm={0} count_J={1} count_Chmutov={2} excess={3} ' \
        'expected={4}\n'.format(degree, count.count_J, count.count_Chmutov,
                                count.excess, count.expected_excess)
    emit(out, [Artifact('hypersurface', 'csv', rows_to_csv(
        ['m', 'count_J', 'count_Chmutov', 'excess', 'expected_excess'],
        [[degree, count.count_J, count.count_Chmutov, count.excess,
          count.expected_excess]]), 'hyper', degree)], summary)
    return 0 if count.excess == count.expected_excess else 1
