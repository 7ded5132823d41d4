import logging
from collections import namedtuple

import numpy as np
import scipy.fft

from rajchmanpy.core.series import CoefficientSeries
from rajchmanpy.core.measures import MomentVector
from rajchmanpy.utils import validate


__all__ = ['evaluate', 'wiener_norm', 'sup_norm_estimate', 'boundary_values',
           'pairing', 'SupNormBracket']

LOGGER = logging.getLogger(__name__)

_DISK_TOL = 1e-12


class SupNormBracket(namedtuple('SupNormBracket', ['lower', 'upper', 'argmax', 'refined_upper'])):
    __slots__ = ()

    @property
    def tight_upper(self):
        return min(self.upper, self.refined_upper)


def evaluate(a, z):
    '''
    f_a(z) = sum_j a_j z**j by Horner's rule.

    Parameters
    ----------
    a : CoefficientSeries
    z : complex or array_like of complex
        Points of the closed unit disk.

    Returns
    -------
    value : complex or numpy.ndarray
    '''
    validate._is_instance(a, CoefficientSeries, 'a')
    points = np.asarray(z, dtype=complex)
    if np.any(np.abs(points) > 1 + _DISK_TOL):
        raise ValueError('series are evaluated on the closed unit disk only (|z| <= 1)')
    values = np.polyval(a.coefficients[::-1], points)
    if values.ndim == 0:
        return complex(values)
    return values


def wiener_norm(a):
    '''Norm of f_a in W+, the l1 norm of the coefficients.'''
    validate._is_instance(a, CoefficientSeries, 'a')
    return a.l1_norm


def boundary_values(a, M):
    '''
    f_a at the M-th roots of unity exp(2 pi i m / M), m = 0..M-1, by one FFT
    of the coefficients folded modulo M.
    '''
    M = validate._int_number(M, n_min=1, name='M')
    folded = np.zeros(M, dtype=complex)
    np.add.at(folded, np.arange(a.degree + 1) % M, a.coefficients)
    return scipy.fft.ifft(folded) * M


def sup_norm_estimate(a, M=4096):
    '''
    Two sided estimate of sup |f_a| over the closed disk. For polynomials the
    supremum is attained on the circle.

    Parameters
    ----------
    a : CoefficientSeries
    M : int, default 4096
        Number of equispaced boundary points, at least 8.

    Returns
    -------
    bracket : SupNormBracket
        ``lower`` is the grid maximum, ``upper = lower + (2 pi / M) sum j |a_j|``,
        ``argmax`` the boundary point of the grid maximum.
        ``refined_upper`` is the second order bound
        max_m max_{h = +-pi/M} |f_m + f'_m h| + (pi/M)**2 / 2 sum j**2 |a_j|,
        and ``tight_upper`` the smaller of the two upper bounds.
    '''
    validate._is_instance(a, CoefficientSeries, 'a')
    M = validate._int_number(M, n_min=8, name='M')
    values = boundary_values(a, M)
    moduli = np.abs(values)
    m = int(np.argmax(moduli))
    lower = float(moduli[m])
    upper = lower + 2 * np.pi / M * a.derivative_weight

    j = np.arange(a.degree + 1)
    slopes = 1j * boundary_values(CoefficientSeries(j * a.coefficients), M)
    h = np.pi / M
    first_order = np.maximum(np.abs(values + h * slopes), np.abs(values - h * slopes))
    curvature = float((j**2 * np.abs(a.coefficients)).sum())
    refined = float(first_order.max()) + h**2 / 2 * curvature
    return SupNormBracket(lower, upper, complex(np.exp(2j * np.pi * m / M)), refined)


def pairing(a, x, pad=False):
    '''
    Duality <a, x> = sum_j a_j x_j between l1 and c_0.

    Parameters
    ----------
    a : CoefficientSeries
    x : MomentVector or array_like of complex
        Bounded sequence of length at least D + 1.
    pad : bool, default False
        Zero pad a shorter ``x``.

    Returns
    -------
    value : complex
    '''
    validate._is_instance(a, CoefficientSeries, 'a')
    if isinstance(x, MomentVector):
        x = x.entries
    x = np.asarray(x, dtype=complex).ravel()
    size = a.degree + 1
    if x.size < size:
        if not pad:
            raise ValueError(f'sequence has length {x.size}, at least {size} needed (use pad=True)')
        x = np.concatenate([x, np.zeros(size - x.size, dtype=complex)])
    return complex(np.dot(a.coefficients, x[:size]))
