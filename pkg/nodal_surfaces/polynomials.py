# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Dense polynomials built from line arrangements.

Coefficients live in dense ``numpy`` arrays, ``coeffs[i, j]`` multiplying
``x**i * y**j``. Products of linear factors are expanded by iterated
multiply-accumulate, optionally with a compensated (double-double)
accumulator selected by ``NODAL_PRECISION``. The unexpanded product is
kept alongside the coefficients for evaluating values near critical points.
"""

from __future__ import absolute_import, print_function

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev
from numpy.polynomial import polynomial as P
from werkzeug.utils import cached_property

from .arrangements import lbar_line, sigma
from .errors import DomainError
from .utils import get_config, require_multiple_of_three


@dataclass(frozen=True)
class FactoredForm(object):
    """Sum of scaled products of linear forms, kept unexpanded.

    ``terms`` holds ``(scale, factors)`` pairs. A factor is ``(ax, ay, a0)``
    in two variables or ``(a1, a0)`` in one; a constant has no factors.
    Evaluating the products directly avoids the cancellation of the
    expanded coefficients near critical points.
    """

    terms: tuple

    @classmethod
    def product(cls, factors, scale=1.0):
        """A single product ``scale * prod(factors)``."""
        return cls(((float(scale),
                     tuple(tuple(float(c) for c in f) for f in factors)),))

    @classmethod
    def constant(cls, value):
        """The constant ``value``."""
        return cls(((float(value), ()),))

    def __call__(self, *args):
        """Evaluate at scalars or broadcastable arrays."""
        args = np.broadcast_arrays(*[np.asarray(a, dtype=float)
                                     for a in args])
        total = np.zeros(args[0].shape)
        for scale, factors in self.terms:
            value = np.full(args[0].shape, scale)
            for factor in factors:
                form = factor[-1]
                for coeff, arg in zip(factor[:-1], args):
                    form = form + coeff * arg
                value = value * form
            total = total + value
        return total if total.shape else float(total)

    def __add__(self, other):
        """Concatenate the terms."""
        return FactoredForm(self.terms + other.terms)

    def scaled(self, factor):
        """Multiply every term by a number."""
        return FactoredForm(tuple((scale * float(factor), factors)
                                  for scale, factors in self.terms))

    def mirror(self):
        """Substitute ``y -> -y`` in bivariate factors."""
        return FactoredForm(tuple(
            (scale, tuple((f[0], -f[1], f[2]) for f in factors))
            for scale, factors in self.terms))

    def restrict_y0(self):
        """Substitute ``y = 0``, leaving univariate factors."""
        return FactoredForm(tuple(
            (scale, tuple((f[0], f[2]) for f in factors))
            for scale, factors in self.terms))


def _sum_forms(first, second):
    if first is None or second is None:
        return None
    return first + second


def _scale_form(form, factor):
    return None if form is None else form.scaled(factor)


class BivarPoly(object):
    """Real polynomial in ``x`` and ``y``.

    ``factored`` optionally carries the same polynomial as a
    :py:class:`FactoredForm`; arithmetic keeps it in step with the
    coefficients and :py:meth:`value_at` prefers it.
    """

    def __init__(self, coeffs, factored=None):
        """Initialize from a 2D coefficient array."""
        coeffs = np.array(coeffs, dtype=float, ndmin=2)
        coeffs.setflags(write=False)
        self.coeffs = coeffs
        self.factored = factored

    @classmethod
    def from_terms(cls, terms, degree=None):
        """Build from ``{(i, j): c}``."""
        size = max([i + j for i, j in terms] + [degree or 0]) + 1
        coeffs = np.zeros((size, size))
        for (i, j), c in terms.items():
            coeffs[i, j] += c
        return cls(coeffs)

    @cached_property
    def degree(self):
        """Largest total degree carrying a non negligible coefficient."""
        mags = np.abs(self.coeffs)
        top = mags.max()
        if top == 0:
            return 0
        i, j = np.nonzero(mags > 1e-9 * top)
        return int((i + j).max())

    def __call__(self, x, y):
        """Evaluate at scalars or broadcastable arrays."""
        return P.polyval2d(x, y, self.coeffs)

    evaluate = __call__

    def value_at(self, x, y):
        """Evaluate through the factored form when there is one."""
        if self.factored is None:
            return self(x, y)
        return self.factored(x, y)

    @cached_property
    def _dx(self):
        return P.polyder(self.coeffs, axis=0)

    @cached_property
    def _dy(self):
        return P.polyder(self.coeffs, axis=1)

    @cached_property
    def _second(self):
        return (P.polyder(self._dx, axis=0), P.polyder(self._dx, axis=1),
                P.polyder(self._dy, axis=1))

    @cached_property
    def _abs(self):
        return np.abs(self.coeffs)

    @cached_property
    def _abs_grad(self):
        return np.abs(self._dx), np.abs(self._dy)

    def gradient(self, x, y):
        """Exact gradient ``(p_x, p_y)``."""
        return np.array([P.polyval2d(x, y, self._dx),
                         P.polyval2d(x, y, self._dy)])

    def hessian(self, x, y):
        """Exact Hessian ``[[p_xx, p_xy], [p_xy, p_yy]]``."""
        dxx, dxy, dyy = self._second
        hxy = P.polyval2d(x, y, dxy)
        return np.array([[P.polyval2d(x, y, dxx), hxy],
                         [hxy, P.polyval2d(x, y, dyy)]])

    def scale(self, x, y):
        """Magnitude of the terms at a point, ``sum |c_ij| |x|^i |y|^j``.

        Used to make tolerances aware of the cancellation in an
        evaluation.
        """
        return float(P.polyval2d(abs(x), abs(y), self._abs))

    def gradient_scale(self, x, y):
        """``sum |terms|`` of both partial derivatives at a point."""
        gx, gy = self._abs_grad
        return float(P.polyval2d(abs(x), abs(y), gx) +
                     P.polyval2d(abs(x), abs(y), gy))

    @property
    def coefficient_scale(self):
        """Largest coefficient magnitude."""
        return float(self._abs.max())

    def mirror(self):
        """``p(x, -y)``."""
        signs = (-1.0) ** np.arange(self.coeffs.shape[1])
        return BivarPoly(self.coeffs * signs[np.newaxis, :],
                         self.factored and self.factored.mirror())

    def restrict_y0(self):
        """``p(x, 0)`` as a univariate polynomial."""
        return UnivarPoly(self.coeffs[:, 0],
                          self.factored and self.factored.restrict_y0())

    def _aligned(self, other):
        n = max(self.coeffs.shape[0], other.coeffs.shape[0])
        a = np.zeros((n, n))
        b = np.zeros((n, n))
        a[:self.coeffs.shape[0], :self.coeffs.shape[1]] = self.coeffs
        b[:other.coeffs.shape[0], :other.coeffs.shape[1]] = other.coeffs
        return a, b

    def __add__(self, other):
        """Sum; numbers add to the constant term."""
        if not isinstance(other, BivarPoly):
            other = BivarPoly([[float(other)]],
                              FactoredForm.constant(other))
        a, b = self._aligned(other)
        return BivarPoly(a + b, _sum_forms(self.factored, other.factored))

    __radd__ = __add__

    def __neg__(self):
        """Negation."""
        return BivarPoly(-self.coeffs, _scale_form(self.factored, -1.0))

    def __sub__(self, other):
        """Difference."""
        return self + (-other)

    def __rsub__(self, other):
        """Difference with a number on the left."""
        return (-self) + other

    def __mul__(self, factor):
        """Scalar multiple."""
        return BivarPoly(self.coeffs * float(factor),
                         _scale_form(self.factored, factor))

    __rmul__ = __mul__

    def terms(self, prune=None):
        """Nonzero ``(i, j, c)`` triples sorted by ``(i, j)``.

        :param prune: drop coefficients below this fraction of the largest
            one.
        """
        top = self.coefficient_scale
        cut = 0.0 if prune is None else prune * top
        i, j = np.nonzero(self._abs > cut)
        return [(int(a), int(b), float(self.coeffs[a, b]))
                for a, b in sorted(zip(i, j))]

    def allclose(self, other, rtol=None):
        """Coefficientwise comparison relative to the largest coefficient."""
        rtol = get_config('NODAL_COEFFICIENT_RTOL') if rtol is None else rtol
        a, b = self._aligned(other)
        top = max(np.abs(a).max(), np.abs(b).max(), 1.0)
        return bool(np.all(np.abs(a - b) <= rtol * top))

    def to_dict(self, prune=None):
        """Serialize following ``nodal/polynomial-v1.0.0.json``."""
        prune = get_config('NODAL_PRUNE_THRESHOLD') if prune is None \
            else prune
        return {
            'degree': self.degree,
            'vars': ['x', 'y'],
            'terms': [{'i': i, 'j': j, 'c': c}
                      for i, j, c in self.terms(prune)],
        }

    @classmethod
    def from_dict(cls, data):
        """Inverse of :py:meth:`to_dict`."""
        return cls.from_terms({(t['i'], t['j']): t['c']
                               for t in data['terms']}, data['degree'])

    def __repr__(self):
        """Short representation."""
        return '<BivarPoly degree={0}>'.format(self.degree)


class UnivarPoly(object):
    """Real polynomial in one variable, ascending coefficients."""

    def __init__(self, coeffs, factored=None):
        """Initialize and trim negligible leading coefficients."""
        coeffs = np.atleast_1d(np.array(coeffs, dtype=float))
        top = np.abs(coeffs).max() if coeffs.size else 0.0
        if top > 0:
            keep = np.nonzero(np.abs(coeffs) > 1e-12 * top)[0][-1] + 1
            coeffs = coeffs[:keep]
        else:
            coeffs = np.zeros(1)
        coeffs.setflags(write=False)
        self.coeffs = coeffs
        self.factored = factored

    @property
    def degree(self):
        """Degree; the zero polynomial has degree 0."""
        return len(self.coeffs) - 1

    def __call__(self, z):
        """Evaluate at scalars or arrays."""
        return P.polyval(z, self.coeffs)

    def value_at(self, z):
        """Evaluate through the factored form when there is one."""
        if self.factored is None:
            return self(z)
        return self.factored(z)

    def deriv(self, order=1):
        """Derivative of the given order."""
        return UnivarPoly(P.polyder(self.coeffs, order))

    def scale(self, z):
        """``sum |c_k| |z|^k``."""
        return float(P.polyval(abs(z), np.abs(self.coeffs)))

    def __add__(self, other):
        """Sum; numbers add to the constant term."""
        if not isinstance(other, UnivarPoly):
            other = UnivarPoly([float(other)], FactoredForm.constant(other))
        return UnivarPoly(P.polyadd(self.coeffs, other.coeffs),
                          _sum_forms(self.factored, other.factored))

    __radd__ = __add__

    def __mul__(self, factor):
        """Scalar multiple."""
        return UnivarPoly(self.coeffs * float(factor),
                          _scale_form(self.factored, factor))

    __rmul__ = __mul__

    def __neg__(self):
        """Negation."""
        return UnivarPoly(-self.coeffs, _scale_form(self.factored, -1.0))

    def __sub__(self, other):
        """Difference."""
        return self + (-other)

    def allclose(self, other, rtol=None):
        """Coefficientwise comparison relative to the largest coefficient."""
        rtol = get_config('NODAL_COEFFICIENT_RTOL') if rtol is None else rtol
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.pad(self.coeffs, (0, n - len(self.coeffs)))
        b = np.pad(other.coeffs, (0, n - len(other.coeffs)))
        top = max(np.abs(a).max(), np.abs(b).max(), 1.0)
        return bool(np.all(np.abs(a - b) <= rtol * top))

    def to_dict(self, prune=None):
        """Serialize following ``nodal/polynomial-v1.0.0.json``."""
        prune = get_config('NODAL_PRUNE_THRESHOLD') if prune is None \
            else prune
        cut = prune * np.abs(self.coeffs).max()
        return {
            'degree': self.degree,
            'vars': ['z'],
            'terms': [{'i': int(k), 'j': 0, 'c': float(c)}
                      for k, c in enumerate(self.coeffs) if abs(c) > cut],
        }

    @classmethod
    def from_dict(cls, data):
        """Inverse of :py:meth:`to_dict`."""
        coeffs = np.zeros(data['degree'] + 1)
        for term in data['terms']:
            coeffs[term['i']] += term['c']
        return cls(coeffs)

    def __repr__(self):
        """Short representation."""
        return '<UnivarPoly degree={0}>'.format(self.degree)


@dataclass(frozen=True)
class NormalizationData(object):
    """Constants mapping ``J_{m Sigma_C}`` onto ``J_m^C``."""

    m: int
    q: int
    c: float
    theta: float
    a: float
    lambda_: float
    b: float


#
# Expansion of products of linear factors
#
def _split(a):
    """Veltkamp split of a double into two 26-bit halves."""
    t = 134217729.0 * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _dd_scale(hi, lo, f):
    p, e = _two_prod(hi, f)
    return _two_sum(p, e + lo * f)


def _dd_add(h1, l1, h2, l2):
    s, e = _two_sum(h1, h2)
    return _two_sum(s, e + l1 + l2)


def _shifted(arr, axis):
    out = np.zeros_like(arr)
    if axis == 0:
        out[1:, :] = arr[:-1, :]
    else:
        out[:, 1:] = arr[:, :-1]
    return out


def from_linear_factors(factors, scale=1.0, precision=None):
    """Expand ``scale * prod(ax x + ay y + a0)``.

    :param factors: iterable of ``(ax, ay, a0)``.
    :param precision: ``'double'`` or ``'compensated'``; defaults to
        ``NODAL_PRECISION``.
    :rtype: :py:class:`BivarPoly`
    """
    factors = list(factors)
    precision = precision or get_config('NODAL_PRECISION')
    if precision not in ('double', 'compensated'):
        raise DomainError({'precision': precision})
    n = len(factors) + 1
    hi = np.zeros((n, n))
    hi[0, 0] = float(scale)
    lo = np.zeros((n, n))
    for ax, ay, a0 in factors:
        if precision == 'double':
            hi = a0 * hi + ax * _shifted(hi, 0) + ay * _shifted(hi, 1)
            continue
        h0, l0 = _dd_scale(hi, lo, a0)
        h1, l1 = _dd_scale(_shifted(hi, 0), _shifted(lo, 0), ax)
        h2, l2 = _dd_scale(_shifted(hi, 1), _shifted(lo, 1), ay)
        h, lo_ = _dd_add(h0, l0, h1, l1)
        hi, lo = _dd_add(h, lo_, h2, l2)
    return BivarPoly(hi + lo, FactoredForm.product(factors, scale))


def eval_linear_factors(factors, x, y, scale=1.0):
    """Evaluate a product of linear factors without expanding it."""
    return FactoredForm.product(factors, scale)(x, y)


def sigma_sign(system, m):
    """Sign prefactor of ``J_{m Sigma_D}`` or ``J_{m Sigma_C}``."""
    if system == 'Sigma_D':
        return (-1) ** (m // 2)
    elif system == 'Sigma_C':
        return (-1) ** ((m + 1) // 2 + 1)
    raise DomainError({'system': system})


def expand_sigma_poly(arr, precision=None):
    """Expanded ``J_{m Sigma}`` of a ``Sigma_D`` or ``Sigma_C`` arrangement.

    Axis factors are part of the arrangement already, so the polynomial is
    the signed product of all its lines.
    """
    sign = sigma_sign(arr.system, arr.m)
    factors = [line.linear_coefficients() for line in arr.lines]
    return from_linear_factors(factors, sign, precision)


def sigma_factors(X, m, u=None, v=None):
    """Linear factors of ``Sigma_X`` composed with ``x = u``, ``y = v``."""
    arr = sigma(X, m)
    if u is None:
        return arr, [line.linear_coefficients() for line in arr.lines]
    return arr, [line.compose(u, v) for line in arr.lines]


#
# Chebyshev polynomials
#
def chebyshev_T(m):
    """Chebyshev polynomial of the first kind ``T_m`` by recurrence.

    The factored form ``2^(m-1) prod(z - cos((2k-1) pi / 2m))`` rides along.
    """
    if int(m) != m or m < 0:
        raise DomainError({'m': m})
    prev = np.zeros(m + 1, dtype=np.int64)
    prev[0] = 1
    if m == 0:
        return UnivarPoly(prev.astype(float), FactoredForm.constant(1.0))
    cur = np.zeros(m + 1, dtype=np.int64)
    cur[1] = 1
    for _ in range(m - 1):
        nxt = -prev
        nxt[1:] += 2 * cur[:-1]
        prev, cur = cur, nxt
    roots = np.cos((2 * np.arange(1, m + 1) - 1) * np.pi / (2 * m))
    return UnivarPoly(cur.astype(float), FactoredForm.product(
        [(1.0, -r) for r in roots], 2.0 ** (m - 1)))


#
# Normalization
#
def scaling_constants(m):
    """``(a_m, b_m)`` relating ``J_{m Sigma_D}`` to the folding polynomial."""
    if int(m) != m or m < 3:
        raise DomainError({'m': m})
    pi = math.pi
    if m % 2 == 0:
        a = (math.sin((m + 2) * pi / (4 * m)) *
             math.sin((m - 2) * pi / (4 * m)) * math.sin(pi / m) /
             (math.sin(pi / (2 * m)) * math.sin(2 * pi / m)))
        return a, 2.0 / a ** m
    a = (2 * math.cos(pi / (2 * m)) * math.sin(pi / m) ** 2 /
         (3 * math.sin(pi / m) - math.sin(3 * pi / m)))
    return a, 2.0 * m / a ** m


def barycenter_abscissa(q):
    """``c_{3q}``, abscissa of the central triangle barycenter."""
    return (math.sqrt(3) / 4 +
            math.sin((q - 1) * math.pi / (6 * q)) /
            (2 * math.sin(math.pi / (6 * q))))


def normalization_data(m):
    """Normalization constants of ``J_m^C``.

    ``lambda_`` is measured as ``-J_{m Sigma_C}(c, 1/4)``, the value at the
    central minimum.

    :raises DomainError: unless ``m = 3q``.
    """
    require_multiple_of_three(m)
    q = m // 3
    c = barycenter_abscissa(q)
    a, b = scaling_constants(m)
    arr, factors = sigma_factors('C', m)
    value = eval_linear_factors(factors, c, 0.25, sigma_sign(arr.system, m))
    return NormalizationData(m=m, q=q, c=c, theta=math.pi / (6 * m), a=a,
                             lambda_=-value, b=b)


def lambda_closed_form(m):
    """``a_m^m / 2`` for odd ``m`` and ``a_m^m / (2m)`` for even ``m``."""
    require_multiple_of_three(m)
    a, _ = scaling_constants(m)
    return a ** m / 2.0 if m % 2 else a ** m / (2.0 * m)


def substitution(norm, theta=None):
    """Linear forms ``(u, v)`` of the rotate-scale-translate map.

    ``u = a x cos t + a y sin t + c`` and
    ``v = -a x sin t + a y cos t + 1/4`` with ``t = theta``.
    """
    theta = norm.theta if theta is None else theta
    cos_, sin_ = math.cos(theta), math.sin(theta)
    return ((norm.a * cos_, norm.a * sin_, norm.c),
            (-norm.a * sin_, norm.a * cos_, 0.25))


def to_normalized_frame(norm, u, v):
    """Map points of the ``Sigma_C`` plane into the ``J_m^C`` plane."""
    du, dv = np.asarray(u) - norm.c, np.asarray(v) - 0.25
    cos_, sin_ = math.cos(norm.theta), math.sin(norm.theta)
    return ((du * cos_ - dv * sin_) / norm.a,
            (du * sin_ + dv * cos_) / norm.a)


def jc_factors(m, theta=None):
    """Linear factors and scale of ``J_m^C``."""
    norm = normalization_data(m)
    u, v = substitution(norm, theta)
    arr, factors = sigma_factors('C', m, u, v)
    return factors, sigma_sign(arr.system, m) / norm.lambda_


def normalized_JC(m, precision=None):
    """``J_m^C(x, y) = J_{m Sigma_C}(u, v) / lambda``."""
    factors, scale = jc_factors(m)
    return from_linear_factors(factors, scale, precision)


def jbar_factors(m):
    """Linear factors and prefactor of ``Jbar_m^C``."""
    require_multiple_of_three(m)
    q = m // 3
    prefactor = 3.0 ** ((1 - (-1) ** m) / 4.0) * \
        (-1) ** ((q + 1) // 2 + 1)
    factors = [lbar_line(6 * nu + 1, m).linear_coefficients()
               for nu in range(m)]
    return factors, prefactor


def build_Jbar(m, precision=None):
    """``Jbar_m^C`` as the signed product of the lines ``Lbar_{6nu+1,m}``."""
    factors, prefactor = jbar_factors(m)
    return from_linear_factors(factors, prefactor, precision)


def sigma_d_poly(m, precision=None):
    """Unnormalized ``J_{m Sigma_D}``."""
    return expand_sigma_poly(sigma('D', m), precision)


def folding_F(m, route=None, precision=None):
    """Folding polynomial ``F`` of degree ``m``.

    :param route: ``'identity'`` computes ``6 - J_m^C - Jbar_m^C`` and
        needs ``m = 3q``; ``'substitution'`` computes
        ``b_m J_{m Sigma_D}(a_m x + a_m, a_m y)`` for any ``m >= 3``.
        Defaults to ``'identity'`` when ``m`` is a multiple of three.
    """
    if route is None:
        route = 'identity' if m % 3 == 0 else 'substitution'
    if route == 'identity':
        return 6 - normalized_JC(m, precision) - build_Jbar(m, precision)
    elif route != 'substitution':
        raise DomainError({'route': route})
    if m > get_config('NODAL_MAX_DEGREE'):
        raise DomainError({'m': m, 'max_degree':
                           get_config('NODAL_MAX_DEGREE')})
    a, b = scaling_constants(m)
    arr, factors = sigma_factors('D', m, (a, 0.0, a), (0.0, a, 0.0))
    return from_linear_factors(factors, sigma_sign(arr.system, m) * b,
                               precision)


def to_folding_frame(m, u, v):
    """Map points of the ``Sigma_D`` plane into the ``F`` plane."""
    a, _ = scaling_constants(m)
    return np.asarray(u) / a - 1.0, np.asarray(v) / a


#
# Printed restrictions to the x-axis
#
KNOWN_RESTRICTIONS = {
    9: [-1, 0, 27, -9, -54, 36, 21, -27, 9, -1],
    15: [-1, 0, 75, -25, -450, 300, 895, -945, -495, 1045, -297, -285, 260,
         -90, 15, -1],
    18: [-1, 0, 108, -36, -945, 630, 2919, -3024, -3366, 5720, 0, -4212,
         2457, 378, -1035, 528, -135, 18, -1],
}
"""Published coefficient lists of ``J_m^C(x, 0)``, ascending powers."""


@dataclass(frozen=True)
class Erratum(object):
    """A published coefficient that disagrees with the recomputation."""

    name: str
    index: int
    printed: float
    direct: float
    interpolated: float


def restriction_by_interpolation(m, theta=None):
    """Recompute ``J_m^C(x, 0)`` by sampling and Chebyshev fitting.

    The samples evaluate the factored product, so this route shares no
    code with the expansion.
    """
    factors, scale = jc_factors(m, theta)
    nodes = np.cos((np.arange(4 * m) + 0.5) * np.pi / (4 * m))
    values = eval_linear_factors(factors, nodes, np.zeros_like(nodes), scale)
    fit = chebyshev.Chebyshev.fit(nodes, values, m, domain=[-1, 1])
    return UnivarPoly(chebyshev.cheb2poly(fit.coef))


def rotated_restriction(m, theta, precision=None):
    """``J_m^C(x, 0)`` with the rotation angle replaced by ``theta``."""
    factors, scale = jc_factors(m, theta)
    return from_linear_factors(factors, scale, precision).restrict_y0()


def check_printed_restriction(m, printed=None, rtol=None):
    """Compare a printed restriction with two recomputations.

    :returns: ``(direct, interpolated, errata, consistent)`` where
        ``consistent`` tells if both recomputations agree with each other.
    """
    rtol = get_config('NODAL_COEFFICIENT_RTOL') if rtol is None else rtol
    printed = KNOWN_RESTRICTIONS[m] if printed is None else printed
    direct = normalized_JC(m).restrict_y0()
    interpolated = restriction_by_interpolation(m)
    n = max(len(printed), len(direct.coeffs), len(interpolated.coeffs))
    pr = np.pad(np.asarray(printed, dtype=float), (0, n - len(printed)))
    di = np.pad(direct.coeffs, (0, n - len(direct.coeffs)))
    ip = np.pad(interpolated.coeffs, (0, n - len(interpolated.coeffs)))
    errata = []
    for k in range(n):
        if abs(pr[k] - di[k]) > rtol * max(abs(pr[k]), abs(di[k]), 1.0):
            errata.append(Erratum('J_{0}^C(x,0)'.format(m), k, pr[k], di[k],
                                  ip[k]))
    consistent = direct.allclose(interpolated, rtol)
    return direct, interpolated, errata, consistent


def critical_points_1d(g, grid=None):
    """Real critical points of a univariate polynomial.

    Sign changes of ``g'`` on a dense grid over an interval enclosing all
    its complex roots are refined by bisection and polished by Newton.

    :returns: list of ``(z, value, kind)`` sorted by ``z``; ``kind`` is
        ``'min'``, ``'max'`` or ``'degenerate'``.
    """
    dg = g.deriv()
    if dg.degree == 0:
        return []
    d2g = dg.deriv()
    roots = P.polyroots(dg.coeffs)
    lo, hi = roots.real.min(), roots.real.max()
    pad = 0.05 * (hi - lo) + 1e-3 * (1.0 + max(abs(lo), abs(hi)))
    grid = grid or 2000 * dg.degree
    zs = np.linspace(lo - pad, hi + pad, grid + 1)
    vals = dg(zs)
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    exact = np.nonzero(vals == 0)[0]
    left, right = zs[idx], zs[idx + 1]
    fleft = vals[idx]
    for _ in range(60):
        mid = 0.5 * (left + right)
        fmid = dg(mid)
        same = np.sign(fmid) == np.sign(fleft)
        left = np.where(same, mid, left)
        fleft = np.where(same, fmid, fleft)
        right = np.where(same, right, mid)
    found = list(0.5 * (left + right)) + list(zs[exact])
    out = []
    for z in sorted(found):
        for _ in range(3):
            curv = d2g(z)
            if curv == 0:
                break
            z = z - dg(z) / curv
        if out and abs(z - out[-1][0]) <= 1e-9 * (1.0 + abs(z)):
            continue
        curv = d2g(z)
        kind = 'min' if curv > 0 else 'max' if curv < 0 else 'degenerate'
        out.append((float(z), float(g.value_at(z)), kind))
    return out
