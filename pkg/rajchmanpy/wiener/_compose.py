import logging
import warnings

import numpy as np

from rajchmanpy.core.series import CoefficientSeries
from rajchmanpy.utils import validate, DEFAULT_SETTINGS


__all__ = ['AnalyticGerm', 'compose_power_series', 'reciprocal_one_plus',
           'mobius_postcompose', 'fejer_means']

LOGGER = logging.getLogger(__name__)


class AnalyticGerm:
    '''
    Taylor coefficients F_0, F_1, ... of an analytic function at 0.

    Parameters
    ----------
    coefficients : array_like of complex
    radius : float, default numpy.inf
        Radius of convergence. ``inf`` marks a polynomial, for which the
        given coefficients are the whole function.

    Example
    -------
    >>> geometric = AnalyticGerm.geometric(8)  # 1/(1+w)
    >>> geometric.radius
    1.0
    '''

    def __init__(self, coefficients, radius=np.inf):
        coefficients = np.array(coefficients, dtype=complex).ravel()
        if coefficients.size == 0:
            raise ValueError('a germ needs at least one coefficient')
        self.coefficients = coefficients
        self.radius = float(radius)

    @property
    def is_polynomial(self):
        return np.isinf(self.radius)

    @classmethod
    def polynomial(cls, coefficients):
        return cls(coefficients)

    @classmethod
    def geometric(cls, degree):
        '''1/(1+w) = sum (-w)**k, radius 1.'''
        return cls((-1.0)**np.arange(degree + 1), radius=1.0)

    @classmethod
    def power(cls, k):
        '''w**k, which fixes 1 and maps the disk into itself.'''
        coefficients = np.zeros(k + 1)
        coefficients[k] = 1.0
        return cls(coefficients)

    def __call__(self, w):
        return np.polyval(self.coefficients[::-1], w)

    def __repr__(self):
        return f'AnalyticGerm(terms={self.coefficients.size}, radius={self.radius})'


def _check_degree(degree, fallback):
    if degree is None:
        return fallback
    return validate._int_number(degree, n_min=0, n_max=DEFAULT_SETTINGS.max_degree, name='degree')


def compose_power_series(germ, g, degree=None):
    '''
    Degree ``degree`` truncation of F o g, by Horner's rule on series.

    Parameters
    ----------
    germ : AnalyticGerm or array_like
        Taylor coefficients of F.
    g : CoefficientSeries
    degree : int, default ``g.degree``

    Returns
    -------
    composed : CoefficientSeries
        Exact for polynomial F. For a truncated germ composed at g(0) != 0
        the result is approximate and its ``residual`` is ``inf``.
    '''
    if not isinstance(germ, AnalyticGerm):
        germ = AnalyticGerm(germ)
    validate._is_instance(g, CoefficientSeries, 'g')
    degree = _check_degree(degree, g.degree)
    g0 = g[0]
    if abs(g0) >= germ.radius:
        raise ValueError(f'germ radius violation: |g(0)| = {abs(g0):.6g} '
                         f'is not below the radius {germ.radius:.6g}')
    inner = g.truncate(degree).coefficients
    result = np.zeros(degree + 1, dtype=complex)
    for f_i in germ.coefficients[::-1]:
        result = np.convolve(result, inner)[:degree + 1]
        result[0] += f_i
    residual = 0.0
    if not germ.is_polynomial and g0 != 0:
        warnings.warn('truncated germ composed at a nonzero base point; result is approximate')
        residual = np.inf
    LOGGER.debug('composed %d germ terms to degree %d', germ.coefficients.size, degree)
    return CoefficientSeries(result, residual=residual)


def reciprocal_one_plus(F, degree=None, tol=None):
    '''
    Coefficients of 1/(1 + F) by long division.

    Parameters
    ----------
    F : CoefficientSeries
    degree : int, default ``F.degree``
    tol : float, default ``Settings.reciprocal_tol``
        A warning is issued when (1 + F) * result differs from 1 by more.

    Returns
    -------
    reciprocal : CoefficientSeries
    '''
    validate._is_instance(F, CoefficientSeries, 'F')
    degree = _check_degree(degree, F.degree)
    tol = DEFAULT_SETTINGS.reciprocal_tol if tol is None else tol
    h = (F + 1.0).truncate(degree).coefficients
    h0 = h[0]
    if h0 == 0:
        raise ZeroDivisionError('1 + F(0) vanishes, the reciprocal does not exist')
    r = np.zeros(degree + 1, dtype=complex)
    r[0] = 1 / h0
    for k in range(1, degree + 1):
        r[k] = -np.dot(h[1:k + 1], r[k - 1::-1]) / h0
    check = np.convolve(h, r)[:degree + 1]
    check[0] -= 1.0
    defect = float(np.abs(check).max())
    if defect > tol:
        warnings.warn(f'reciprocal series defect {defect:.3g} exceeds {tol:.3g}')
    LOGGER.debug('reciprocal to degree %d, defect %.3g', degree, defect)
    return CoefficientSeries(r)


def mobius_postcompose(g, g0=None, degree=None):
    '''
    G = F o g for the disk automorphism F(w) = e^{i gamma} (w - g0) / (1 - conj(g0) w),
    e^{-i gamma} = (1 - g0) / (1 - conj(g0)). Then G(0) = 0 and F(1) = 1.

    Parameters
    ----------
    g : CoefficientSeries
    g0 : complex, default g(0)
    degree : int, default ``g.degree``

    Returns
    -------
    G : CoefficientSeries
        Constant coefficient exactly 0.
    '''
    validate._is_instance(g, CoefficientSeries, 'g')
    g0 = g[0] if g0 is None else validate._complex_number(g0, name='g0')
    if g0 == 0:
        raise ValueError('g(0) = 0 already, nothing to normalize')
    if abs(g0) >= 1:
        raise ValueError(f'|g(0)| = {abs(g0):.6g} must be below 1')
    degree = _check_degree(degree, g.degree)
    phase = (1 - np.conj(g0)) / (1 - g0)
    shifted = g.truncate(degree) - g0
    denominator = reciprocal_one_plus(g.truncate(degree) * (-np.conj(g0)), degree)
    coefficients = (phase * np.convolve(shifted.coefficients,
                                        denominator.coefficients)[:degree + 1])
    coefficients[0] = 0.0
    return CoefficientSeries(coefficients, residual=g.residual)


def fejer_means(a):
    '''
    Fejer (Cesaro) means sum_j (1 - j/(D+1)) a_j z**j. The Fejer kernel is
    positive, so the sup norm on the circle does not increase.
    '''
    validate._is_instance(a, CoefficientSeries, 'a')
    j = np.arange(a.degree + 1)
    return CoefficientSeries(a.coefficients * (1 - j / (a.degree + 1)), residual=a.residual)
