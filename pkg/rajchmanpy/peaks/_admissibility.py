import logging
from collections import namedtuple

import numpy as np

from rajchmanpy.core.ratio import RatioParam
from rajchmanpy.circlemeasure import as_ratio
from rajchmanpy.utils import RajchmanValidator, validate, DEFAULT_SETTINGS


__all__ = ['PeakParams', 'admissible_parameters', 'metric_sum', 'peak_threshold',
           'Admissibility']

LOGGER = logging.getLogger(__name__)

# 2 xi**(1 - alpha) this close to 1 counts as the divergent regime
_DIVERGENCE_TOL = 1e-12

Admissibility = namedtuple('Admissibility', ['accepted', 'threshold', 'reasons'])


def _ratio_float(xi):
    if isinstance(xi, (RatioParam, str)):
        return float(as_ratio(xi))
    value = validate._float_number(xi, name='xi')
    if not 0 < value < 0.5:
        raise ValueError('ratio must satisfy 0 < xi < 1/2')
    return value


def peak_threshold(alpha):
    '''(1/2)**(1/(1 - alpha)), the largest ratio whose Cantor set is a peak set.'''
    alpha = validate._float_number(alpha, name='alpha')
    if alpha >= 1:
        return 0.0
    return 0.5**(1 / (1 - alpha))


def admissible_parameters(alpha, xi):
    '''
    Lipschitz exponent and ratio for which the Cantor set of ratio xi is a
    peak set for the Lipschitz class of order alpha inside W+.

    Parameters
    ----------
    alpha : float
    xi : RatioParam, str or float

    Returns
    -------
    verdict : Admissibility
        ``accepted`` iff 1/2 < alpha < 1 and xi < (1/2)**(1/(1 - alpha));
        ``threshold`` is that bound; ``reasons`` lists every failed condition.

    Examples
    --------
    >>> admissible_parameters(0.6, '2/13').accepted
    True
    >>> admissible_parameters(0.6, '1/5').accepted
    False
    '''
    alpha = validate._float_number(alpha, name='alpha')
    value = _ratio_float(xi)
    threshold = peak_threshold(alpha)
    reasons = []
    if not 0.5 < alpha < 1:
        reasons.append(f'alpha = {alpha:.17g} must satisfy 1/2 < alpha < 1')
    if alpha < 1 and not value < threshold:
        reasons.append(f'xi = {value:.17g} must be below (1/2)**(1/(1-alpha)) = {threshold:.17g}')
    return Admissibility(not reasons, threshold, tuple(reasons))


def metric_sum(xi, alpha, K=None):
    '''
    Sum over the complementary gaps of |gap|**(1 - alpha).

    Generation k has 2**k gaps of length xi**k (1 - 2 xi), so the sum is
    (1 - 2 xi)**(1 - alpha) sum_k (2 xi**(1 - alpha))**k.

    Parameters
    ----------
    xi : RatioParam, str or float
    alpha : float
        0 < alpha < 1.
    K : int, optional
        Last generation of a partial sum. ``None`` gives the full sum.

    Returns
    -------
    value : float
        ``numpy.inf`` when the full series diverges, 2 xi**(1 - alpha) >= 1.

    Example
    -------
    >>> round(metric_sum('1/5', 0.5), 3)
    7.337
    '''
    value = _ratio_float(xi)
    alpha = validate._float_number(alpha, name='alpha')
    if not 0 < alpha < 1:
        raise ValueError('alpha must satisfy 0 < alpha < 1')
    first = (1 - 2 * value)**(1 - alpha)
    q = 2 * value**(1 - alpha)
    if K is None:
        if q >= 1 - _DIVERGENCE_TOL:
            LOGGER.debug('metric sum diverges, 2 xi^(1-alpha) = %.17g', q)
            return np.inf
        return first / (1 - q)
    K = validate._int_number(K, n_min=0, name='K')
    return first * float(np.sum(q**np.arange(K + 1)))


class PeakParams(RajchmanValidator):
    '''
    Creates a PeakParams object, the parameters of a peak function candidate.

    Parameters
    ----------
    alpha : float
        Lipschitz exponent, 1/2 < alpha < 1.
    xi : RatioParam or str
        Ratio of the Cantor set, 0 < xi < (1/2)**(1/(1 - alpha)).
    generations : int, default ``Settings.generations``
        Number of removal steps K whose gaps carry the weight.
    degree : int, default ``Settings.degree``
        Output degree D.
    quadrature_order : int, default ``Settings.quadrature_order``
        Gauss-Legendre points per panel.

    Example
    -------
    >>> params = PeakParams(0.6, '2/13')
    >>> params.generations, params.degree
    (10, 4096)
    '''

    def __init__(self, alpha, xi, generations=None, degree=None, quadrature_order=None):
        settings = DEFAULT_SETTINGS
        self.__alpha = self._float_number(alpha, name='alpha')
        self.__xi = as_ratio(xi)
        verdict = admissible_parameters(self.__alpha, self.__xi)
        if not verdict.accepted:
            raise ValueError('; '.join(verdict.reasons))
        self.__threshold = verdict.threshold
        self.__generations = self._int_number(
            settings.generations if generations is None else generations,
            n_min=1, n_max=settings.max_peak_generation, name='generations')
        self.__degree = self._int_number(
            settings.degree if degree is None else degree,
            n_min=1, n_max=settings.max_degree, name='degree')
        self.__quadrature_order = self._int_number(
            settings.quadrature_order if quadrature_order is None else quadrature_order,
            n_min=2, n_max=256, name='quadrature_order')

    #Property getters
    @property
    def alpha(self):
        return self.__alpha
    @property
    def xi(self):
        return self.__xi
    @property
    def generations(self):
        return self.__generations
    @property
    def degree(self):
        return self.__degree
    @property
    def quadrature_order(self):
        return self.__quadrature_order
    @property
    def threshold(self):
        return self.__threshold
    @property
    def tail_ratio(self):
        '''2 xi**(1 - alpha), the mass ratio between consecutive gap generations.'''
        return 2 * float(self.__xi)**(1 - self.__alpha)

    def to_dict(self):
        return {
            'alpha': self.alpha,
            'xi': str(self.xi),
            'generations': self.generations,
            'degree': self.degree,
            'quadrature_order': self.quadrature_order,
            'threshold': self.threshold,
        }

    def __repr__(self):
        return (f'PeakParams(alpha={self.alpha}, xi={self.xi}, K={self.generations}, '
                f'D={self.degree})')

    def __eq__(self, other):
        if isinstance(other, PeakParams):
            return self.to_dict() == other.to_dict()
        return NotImplemented

    __hash__ = None
