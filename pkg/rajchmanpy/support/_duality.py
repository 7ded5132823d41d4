import logging
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np
import scipy.fft
from scipy.special import roots_legendre

from rajchmanpy.core.series import CoefficientSeries
from rajchmanpy.core.measures import DiskAtomSet, MomentVector
from rajchmanpy.core.ratio import IntervalSet
from rajchmanpy.circlemeasure import as_ratio, coefficient_table
from rajchmanpy.wiener import pairing, sup_norm_estimate, evaluate
from rajchmanpy.utils import validate, DEFAULT_SETTINGS


__all__ = ['sup_over_S0', 'search_resolution', 'verify_support_pair',
           'pairing_crosscheck', 'support_deviation', 'SupportReport',
           'SearchResult', 'CrossCheck']

LOGGER = logging.getLogger(__name__)


SearchResult = namedtuple('SearchResult', ['best', 'witness', 'point', 'resolution'])
CrossCheck = namedtuple('CrossCheck', ['series_value', 'integral_value', 'difference', 'bound'])


def search_resolution(a, angles, radii):
    '''
    Gap between the grid search and sup |f_a|: (2 pi/M + 2**-K) sum j |a_j|.
    '''
    return (2 * np.pi / angles + 2.0**(-radii)) * a.derivative_weight


def sup_over_S0(a, angles=None, radii=None):
    '''
    sup over S_0 of |<a, x>|. The objective is convex in x, so the supremum
    over the convex hull is a supremum over single atoms phi_lambda; it is
    searched on lambda = r exp(2 pi i m/M), r = 1 - 2**-k, k = 0..K.

    Parameters
    ----------
    a : CoefficientSeries
    angles : int, default ``Settings.search_angles``
    radii : int, default ``Settings.search_radii``

    Returns
    -------
    result : SearchResult
        ``best`` value, one atom ``witness``, its ``point`` and the
        ``resolution`` of the grid (see ``search_resolution``).

    Note
    ----
    Ties are broken by the smallest angle, then the smallest radius.
    '''
    validate._is_instance(a, CoefficientSeries, 'a')
    if not np.any(a.coefficients):
        raise ValueError('the zero functional has nothing to maximize')
    M = DEFAULT_SETTINGS.search_angles if angles is None else validate._int_number(
        angles, n_min=8, name='angles')
    K = DEFAULT_SETTINGS.search_radii if radii is None else validate._int_number(
        radii, n_min=1, n_max=52, name='radii')
    radius = 1.0 - 2.0**(-np.arange(K + 1))
    j = np.arange(a.degree + 1)
    values = np.empty((K + 1, M))
    for k, r in enumerate(radius):
        folded = np.zeros(M, dtype=complex)
        np.add.at(folded, j % M, a.coefficients * r**j)
        values[k] = np.abs(scipy.fft.ifft(folded) * M)
    best = values.max()
    ties = np.argwhere(values == best)
    k, m = min(((int(k), int(m)) for k, m in ties), key=lambda km: (km[1], km[0]))
    point = complex(radius[k] * np.exp(2j * np.pi * m / M))
    LOGGER.debug('S0 search: best %.17g at r=%.17g, angle index %d', best, radius[k], m)
    return SearchResult(float(best), DiskAtomSet.dirac(point), point,
                        float(search_resolution(a, M, K)))


def support_deviation(b, beta, points):
    '''
    max |f_b(e(t)) - beta| over the points t of [0, 1): how far f_b is from
    being constant on a set carrying the measure.
    '''
    t = np.asarray(points, dtype=float)
    values = evaluate(b, np.exp(2j * np.pi * t))
    return float(np.abs(values - beta).max())


@dataclass
class SupportReport:
    '''
    Result of ``verify_support_pair``; serializes with ``to_dict``.
    '''
    pairing: complex
    sup_lower: float
    sup_upper: float
    ratio: float
    verdict: str
    trivial_flag: bool
    degree: int
    diagnostics: dict = field(default_factory=dict)

    @property
    def supported(self):
        return self.verdict == 'supported'

    def to_dict(self):
        return {
            'pairing': [self.pairing.real, self.pairing.imag],
            'sup_lower': self.sup_lower,
            'sup_upper': self.sup_upper,
            'ratio': self.ratio,
            'verdict': self.verdict,
            'trivial_flag': self.trivial_flag,
            'degree': self.degree,
            'diagnostics': dict(self.diagnostics),
        }


def verify_support_pair(b, y, tau=None, grid=None, support_points=None):
    '''
    Checks whether the functional b attains sup_{x in S_0} |<b, x>| = ||f_b||_inf
    at the moment vector y, up to the truncation at hand.

    Parameters
    ----------
    b : CoefficientSeries
    y : MomentVector
    tau : float, default ``Settings.support_slack``
        The pair is reported as supported when |<b, y>| >= (1 - tau) L.
    grid : int, default ``Settings.sup_grid``
        Boundary grid of the sup norm bracket [L, U]; U is the tighter of
        the two upper bounds of ``sup_norm_estimate``.
    support_points : array_like of float, optional
        Points t of [0, 1) near the support of the measure behind y; adds the
        deviation of f_b from the value <b, y> there.

    Returns
    -------
    report : SupportReport
    '''
    validate._is_instance(b, CoefficientSeries, 'b')
    validate._is_instance(y, MomentVector, 'y')
    tau = DEFAULT_SETTINGS.support_slack if tau is None else validate._float_number(
        tau, n_min=0, n_max=1, name='tau')
    grid = DEFAULT_SETTINGS.sup_grid if grid is None else grid
    if y.degree < b.degree:
        raise ValueError(f'moment vector of degree {y.degree} is shorter than b (degree {b.degree})')
    p = pairing(b, y)
    bracket = sup_norm_estimate(b, grid)
    upper = bracket.tight_upper
    ratio = abs(p) / upper if upper > 0 else 0.0
    error = b.l1_norm * y.error_bound + b.residual
    supported = abs(p) >= (1 - tau) * bracket.lower and bracket.lower > 0
    diagnostics = {
        'tau': tau,
        'grid': int(grid),
        'l1_norm': b.l1_norm,
        'truncation_residual': b.residual,
        'moment_error_bound': y.error_bound,
        'pairing_error_bound': error,
        'pairing_lower_bound': max(0.0, abs(p) - error),
        'derivative_bound_upper': bracket.upper,
        'attained_at': [bracket.argmax.real, bracket.argmax.imag],
        'constant_coefficient': [b[0].real, b[0].imag],
    }
    if support_points is not None:
        diagnostics['support_deviation'] = support_deviation(b, p, support_points)
    report = SupportReport(p, bracket.lower, upper, float(ratio),
                           'supported' if supported else 'not_supported',
                           bool(b.is_trivial), b.degree, diagnostics)
    LOGGER.debug('support pair: |p|=%.17g, bracket [%.17g, %.17g], verdict %s',
                 abs(p), bracket.lower, bracket.upper, report.verdict)
    return report


def _stage_integral(b, stage, order):
    nodes, weights = roots_legendre(order)
    lefts = stage.left_endpoints()
    width = float(stage.width)
    t = lefts[:, None] + width * (nodes[None, :] + 1) / 2
    values = np.polyval(b.coefficients[::-1], np.exp(2j * np.pi * t))
    # each interval carries mass 1/2**m, the rule averages over it
    return complex((values * weights[None, :] / 2).sum() / len(stage))


def pairing_crosscheck(b, xi, m, D=None, tol=None, order=6):
    '''
    Two independent evaluations of the pairing with the Cantor moments:
    sum_j b_j sigma^(-j) from the product formula, and the integral of f_b
    against the stage measure sigma_m by Gauss-Legendre rules on each interval.

    Returns
    -------
    check : CrossCheck
        ``bound`` = ||b||_1 2 pi D xi**m + sum_j |b_j| (product tail_j) + the
        estimated quadrature error.
    '''
    xi = as_ratio(xi)
    validate._is_instance(b, CoefficientSeries, 'b')
    D = b.degree if D is None else validate._int_number(D, n_min=b.degree, name='D')
    m = validate._int_number(m, n_min=0, n_max=DEFAULT_SETTINGS.max_oracle_stage, name='stage')
    table = coefficient_table(xi, range(0, -b.degree - 1, -1), 'product', tol=tol)
    series_value = complex(np.dot(b.coefficients, table.values))
    stage = IntervalSet(xi, m)
    integral_value = _stage_integral(b, stage, order)
    quadrature_error = abs(integral_value - _stage_integral(b, stage, max(2, order - 2)))
    bound = (b.l1_norm * 2 * np.pi * D * float(xi)**m
             + float(np.dot(np.abs(b.coefficients), table.tail_bound))
             + quadrature_error)
    return CrossCheck(series_value, integral_value, abs(series_value - integral_value), bound)
