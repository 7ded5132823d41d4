import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np

from rajchmanpy.core.ratio import RatioParam, IntervalSet
from rajchmanpy.utils import validate, DEFAULT_SETTINGS


__all__ = ['as_ratio', 'cantor_stage', 'complementary_gaps', 'gap_intervals',
           'stage_measure_cdf', 'Gap', 'GapSummary']

LOGGER = logging.getLogger(__name__)


Gap = namedtuple('Gap', ['generation', 'length', 'multiplicity'])


def as_ratio(xi):
    '''Accepts a RatioParam, a Fraction or a ``'p/q'`` string.'''
    if isinstance(xi, RatioParam):
        return xi
    return RatioParam(xi)


def cantor_stage(xi, n, max_generation=None):
    '''
    The stage set E_n(xi): 2**n closed intervals of length xi**n.

    Parameters
    ----------
    xi : RatioParam or str
        Ratio, 0 < xi < 1/2.
    n : int
        Number of removal steps.
    max_generation : int, default ``Settings.max_generation``

    Returns
    -------
    stage : IntervalSet

    Example
    -------
    >>> cantor_stage('1/3', 1).intervals
    [(Fraction(0, 1), Fraction(1, 3)), (Fraction(2, 3), Fraction(1, 1))]
    '''
    xi = as_ratio(xi)
    if max_generation is None:
        max_generation = DEFAULT_SETTINGS.max_generation
    n = validate._int_number(n, n_min=0, n_max=max_generation, name='n')
    LOGGER.debug('building E_%d for xi=%s', n, xi)
    return IntervalSet(xi, n)


class GapSummary:
    '''
    Complementary gaps of the Cantor construction through generation K:
    generation k contributes 2**k open gaps of length xi**k (1 - 2 xi).
    '''

    def __init__(self, ratio, gaps):
        self.ratio = ratio
        self.gaps = tuple(gaps)

    @property
    def total_length(self):
        '''Exact sum of all gap lengths, 1 - (2 xi)**(K+1).'''
        return sum((g.length * g.multiplicity for g in self.gaps), Fraction(0))

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self):
        return len(self.gaps)

    def __getitem__(self, k):
        return self.gaps[k]

    def __repr__(self):
        return f'GapSummary(xi={self.ratio}, generations={len(self)})'


def complementary_gaps(xi, K):
    '''
    Lengths and multiplicities of the removed gaps.

    Parameters
    ----------
    xi : RatioParam or str
    K : int
        Last generation listed.

    Returns
    -------
    summary : GapSummary
        ``Gap(k, xi**k (1 - 2 xi), 2**k)`` for k = 0..K.
    '''
    xi = as_ratio(xi)
    K = validate._int_number(K, n_min=0, name='K')
    r = xi.value
    gaps = [Gap(k, r**k * (1 - 2*r), 2**k) for k in range(K + 1)]
    return GapSummary(xi, gaps)


def gap_intervals(xi, k):
    '''
    Float end points of the 2**k gaps of generation k, the open middle
    parts of the intervals of E_k.

    Returns
    -------
    left, right : numpy.ndarray
    '''
    stage = IntervalSet(as_ratio(xi), k)
    r = float(stage.ratio)
    width = float(stage.width)
    lefts = stage.left_endpoints()
    return lefts + r * width, lefts + (1 - r) * width


def stage_measure_cdf(stage, x):
    '''
    Distribution function of sigma_m, the normalized Lebesgue measure on
    the stage set, at the points ``x`` of [0, 1].

    Parameters
    ----------
    stage : IntervalSet
    x : array_like of float

    Returns
    -------
    cdf : numpy.ndarray
    '''
    x = np.asarray(x, dtype=float)
    lefts = stage.left_endpoints()
    width = float(stage.width)
    count = len(stage)
    idx = np.searchsorted(lefts, x, side='right') - 1
    inside = np.clip(x - lefts[np.clip(idx, 0, None)], 0.0, width) / width
    cdf = np.where(idx < 0, 0.0, (idx + inside) / count)
    return np.clip(cdf, 0.0, 1.0)
