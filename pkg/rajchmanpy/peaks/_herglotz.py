import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.special import roots_legendre

from rajchmanpy.circlemeasure import gap_intervals
from rajchmanpy.utils import validate, DEFAULT_SETTINGS
from ._admissibility import PeakParams, _ratio_float


__all__ = ['HerglotzWeight', 'herglotz_weight_moments', 'weight_nodes', 'central_mass',
           'total_mass']

LOGGER = logging.getLogger(__name__)

# powers of exp(-2 pi i t) are recomputed directly every _ANCHOR steps
_ANCHOR = 256


def central_mass(xi, alpha):
    '''G_0 = 2 ((1 - 2 xi)/2)**(1 - alpha) / (1 - alpha), the weight mass of the central gap.'''
    xi = _ratio_float(xi)
    return 2 * ((1 - 2 * xi) / 2)**(1 - alpha) / (1 - alpha)


def total_mass(xi, alpha):
    '''W = G_0 / (1 - 2 xi**(1 - alpha)), the integral of d_E**(-alpha) over the circle.'''
    q = 2 * _ratio_float(xi)**(1 - alpha)
    if q >= 1:
        return np.inf
    return central_mass(xi, alpha) / (1 - q)


def weight_nodes(params):
    '''
    Quadrature nodes and weights for integrals of d_E(t)**(-alpha) g(t) over
    the gaps of generations 0..K-1.

    Inside a gap the distance to E is the distance to the nearer gap end
    point. On each half gap of length h, s = u**p with p = 1/(1 - alpha)
    turns s**(-alpha) ds into p du on [0, h**(1 - alpha)], which is split
    into max(1, ceil(p h D / 2)) Gauss-Legendre panels.

    Returns
    -------
    nodes, weights : numpy.ndarray
        Points t of (0, 1) and positive weights, ordered by generation, gap,
        half and panel.
    '''
    validate._is_instance(params, PeakParams, 'params')
    alpha = params.alpha
    p = 1 / (1 - alpha)
    x, w = roots_legendre(params.quadrature_order)
    x = (x + 1) / 2
    w = w / 2
    nodes = []
    weights = []
    for k in range(params.generations):
        lefts, rights = gap_intervals(params.xi, k)
        h = float(rights[0] - lefts[0]) / 2
        panels = max(1, math.ceil(p * h * params.degree / 2))
        top = h**(1 - alpha)
        edges = np.linspace(0.0, top, panels + 1)
        u = (edges[:-1, None] + np.diff(edges)[:, None] * x[None, :]).ravel()
        du = np.repeat(np.diff(edges), x.size) * np.tile(w, panels)
        s = u**p
        half = p * du
        gap_nodes = np.concatenate([lefts[:, None] + s[None, :],
                                    rights[:, None] - s[None, :]], axis=1)
        gap_weights = np.broadcast_to(np.concatenate([half, half]), gap_nodes.shape)
        nodes.append(gap_nodes.ravel())
        weights.append(gap_weights.ravel())
        LOGGER.debug('generation %d: %d gaps, half length %.6g, %d panels per half',
                     k, lefts.size, h, panels)
    return np.concatenate(nodes), np.concatenate(weights)


def _moment_block(nodes, weights, start, stop):
    phase = np.exp(-2j * np.pi * nodes)
    out = np.empty(stop - start, dtype=complex)
    for anchor in range(start, stop, _ANCHOR):
        power = weights * np.exp(-2j * np.pi * anchor * nodes)
        for k in range(anchor, min(anchor + _ANCHOR, stop)):
            out[k - start] = power.sum()
            power *= phase
    return out


class HerglotzWeight:
    '''
    Fourier moments c_k = integral of d_E(t)**(-alpha) exp(-2 pi i k t) dt,
    k = 0..D, of the weight restricted to the gaps of generations 0..K-1.

    Parameters
    ----------
    params : PeakParams
    moments : numpy.ndarray of complex
        c_0, ..., c_D.
    nodes, weights : numpy.ndarray
        The discrete positive measure the moments are computed from.
    '''

    def __init__(self, params, moments, nodes, weights):
        self.params = params
        self.moments = np.asarray(moments, dtype=complex)
        self.nodes = nodes
        self.weights = weights

    @property
    def central_mass(self):
        return central_mass(self.params.xi, self.params.alpha)

    @property
    def total_mass(self):
        return total_mass(self.params.xi, self.params.alpha)

    @property
    def tail_ratio(self):
        '''(2 xi**(1 - alpha))**K, the relative weight mass beyond generation K - 1.'''
        return self.params.tail_ratio**self.params.generations

    @property
    def mass(self):
        return float(self.moments[0].real)

    @property
    def mass_defect(self):
        '''|c_0 - W (1 - (2 xi**(1 - alpha))**K)|.'''
        return abs(self.mass - self.total_mass * (1 - self.tail_ratio))

    def moment(self, k):
        '''c_k for |k| <= D; c_{-k} is the conjugate of c_k.'''
        k = validate._int_number(k, n_min=-self.params.degree, n_max=self.params.degree, name='k')
        value = self.moments[abs(k)]
        return complex(np.conj(value) if k < 0 else value)

    def __len__(self):
        return self.moments.size

    def __repr__(self):
        return (f'HerglotzWeight({self.params!r}, nodes={self.nodes.size}, '
                f'c0={self.mass:.6g}, W={self.total_mass:.6g})')


def herglotz_weight_moments(params, threads=None):
    '''
    Builds the HerglotzWeight of ``params``.

    The powers exp(-2 pi i k t) are advanced by one multiplication per k and
    recomputed every 256 steps; blocks of k run on ``threads`` threads and
    are written back in order.

    Parameters
    ----------
    params : PeakParams
    threads : int, default ``Settings.threads``

    Returns
    -------
    weight : HerglotzWeight

    Example
    -------
    >>> weight = herglotz_weight_moments(PeakParams(0.6, '2/13', generations=1, degree=8))
    >>> abs(weight.mass - weight.central_mass) < 1e-12
    True
    '''
    validate._is_instance(params, PeakParams, 'params')
    threads = DEFAULT_SETTINGS.threads if threads is None else validate._int_number(
        threads, n_min=1, name='threads')
    nodes, weights = weight_nodes(params)
    D = params.degree
    blocks = [(start, min(start + _ANCHOR, D + 1)) for start in range(0, D + 1, _ANCHOR)]
    if threads == 1:
        parts = [_moment_block(nodes, weights, a, b) for a, b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ab: _moment_block(nodes, weights, *ab), blocks))
    moments = np.concatenate(parts)
    weight = HerglotzWeight(params, moments, nodes, weights)
    LOGGER.debug('herglotz weight: %d nodes, c0 = %.17g, W = %.17g, mass defect %.3g',
                 nodes.size, weight.mass, weight.total_mass, weight.mass_defect)
    return weight
