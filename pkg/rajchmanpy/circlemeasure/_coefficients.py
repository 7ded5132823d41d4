import math
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from rajchmanpy.core.ratio import IntervalSet
from rajchmanpy.utils import validate, DEFAULT_SETTINGS
from ._cantor import as_ratio


__all__ = ['fs_coeff_product', 'fs_coeff_oracle', 'choose_oracle_stage',
           'product_truncation', 'coefficient_table', 'decay_profile',
           'FourierCoefficientTable', 'CoefficientValue', 'DecayBlock']

LOGGER = logging.getLogger(__name__)

# complex entries of one (indices x intervals) block of the oracle sum
_BLOCK_ENTRIES = 2**20


CoefficientValue = namedtuple('CoefficientValue', ['value', 'tail_bound', 'terms'])
DecayBlock = namedtuple('DecayBlock', ['block', 'start', 'stop', 'max_abs'])


def product_truncation(xi, n, tol):
    '''
    Least K with sum_{k>K} theta_k**2 / 2 < tol, theta_k = pi n xi**(k-1) (1-xi).

    The tail is geometric: (pi n (1-xi))**2 / 2 * xi**(2K) / (1 - xi**2).

    Returns
    -------
    K, tail : int, float
    '''
    r = float(xi)
    if n == 0:
        return 0, 0.0
    scale = (math.pi * abs(n) * (1 - r))**2 / (2 * (1 - r*r))

    def tail(K):
        return scale * r**(2*K)

    K = max(0, math.ceil(math.log(tol / scale) / (2 * math.log(r))))
    while tail(K) >= tol:
        K += 1
    while K > 0 and tail(K - 1) < tol:
        K -= 1
    return K, tail(K)


def _reduced_angles(xi, n, K):
    '''theta_k / pi reduced to [0, 2), k = 1..K. Exact reduction for rational ratios.'''
    if xi.is_rational:
        p, q = xi.numerator, xi.denominator
        out = np.empty(K)
        for k in range(1, K + 1):
            den = q**k
            out[k - 1] = (n * p**(k - 1) * (q - p)) % (2 * den) / den
        return out
    r = float(xi)
    k = np.arange(1, K + 1)
    return np.mod(n * r**(k - 1) * (1 - r), 2.0)


def fs_coeff_product(xi, n, tol=None):
    '''
    Fourier-Stieltjes coefficient of the Cantor measure from the infinite
    product (-1)**n prod_k cos(pi n xi**(k-1) (1-xi)).

    Parameters
    ----------
    xi : RatioParam or str
    n : int
    tol : float, default ``Settings.product_tol``
        The product stops after K factors, K the least index whose
        quadratic tail bound is below ``tol``.

    Returns
    -------
    result : CoefficientValue
        ``(value, tail_bound, terms)``; the value is real, returned as complex.

    Example
    -------
    >>> fs_coeff_product('1/3', 0).value
    (1+0j)
    '''
    xi = as_ratio(xi)
    n = validate._int_number(n, name='n')
    tol = DEFAULT_SETTINGS.product_tol if tol is None else tol
    tol = validate._float_number(tol, name='tol')
    if tol <= 0:
        raise ValueError('tol must be positive')
    K, tail = product_truncation(xi, n, tol)
    if K == 0:
        return CoefficientValue(complex(1.0 if n % 2 == 0 else -1.0), tail, 0)
    factors = np.cos(np.pi * _reduced_angles(xi, n, K))
    sign = -1.0 if n % 2 else 1.0
    value = sign * float(np.prod(factors))
    return CoefficientValue(complex(value), tail, K)


def choose_oracle_stage(xi, n, target, max_stage=None):
    '''
    Least stage m with 2 pi |n| xi**m < target.

    Raises
    ------
    ValueError
        When the stage exceeds ``max_stage``.
    '''
    xi = as_ratio(xi)
    max_stage = DEFAULT_SETTINGS.max_oracle_stage if max_stage is None else max_stage
    n = abs(int(n))
    if n == 0:
        return 0
    r = float(xi)
    m = max(0, math.ceil(math.log(target / (2 * math.pi * n)) / math.log(r)))
    while 2 * math.pi * n * r**m >= target:
        m += 1
    while m > 0 and 2 * math.pi * n * r**(m - 1) < target:
        m -= 1
    if m > max_stage:
        raise ValueError(f'stage {m} needed for n={n} exceeds the maximum stage {max_stage}')
    return m


def _oracle_values(stage, ns):
    lefts = stage.left_endpoints()
    width = float(stage.width)
    count = len(stage)
    chunk = max(1, _BLOCK_ENTRIES // count)
    ns = np.asarray(ns, dtype=float)
    values = np.empty(ns.size, dtype=complex)
    for start in range(0, ns.size, chunk):
        block = ns[start:start + chunk]
        phase = np.exp(-2j * np.pi * np.outer(block, lefts)).sum(axis=1) / count
        # mean of e(-n t) over an interval of length w starting at 0
        x = -2j * np.pi * block * width
        with np.errstate(invalid='ignore', divide='ignore'):
            mean = np.where(block == 0, 1.0, np.expm1(x) / np.where(block == 0, 1.0, x))
        values[start:start + chunk] = phase * mean
    values[ns == 0] = 1.0
    return values


def fs_coeff_oracle(xi, m, n, max_stage=None):
    '''
    Fourier-Stieltjes coefficient of the stage measure sigma_m, integrated in
    closed form interval by interval. It differs from the coefficient of the
    limit measure by at most 2 pi |n| xi**m.

    Parameters
    ----------
    xi : RatioParam or str
    m : int
        Stage.
    n : int or array_like of int

    Returns
    -------
    value : complex or numpy.ndarray
    '''
    xi = as_ratio(xi)
    max_stage = DEFAULT_SETTINGS.max_oracle_stage if max_stage is None else max_stage
    m = validate._int_number(m, n_min=0, n_max=max_stage, name='stage')
    stage = IntervalSet(xi, m)
    if np.ndim(n) == 0:
        return complex(_oracle_values(stage, [int(n)])[0])
    return _oracle_values(stage, np.asarray(n, dtype=int))


class FourierCoefficientTable:
    '''
    Immutable table of Fourier-Stieltjes coefficients mu^(n).

    Parameters
    ----------
    ratio : RatioParam or None
        Ratio of the Cantor measure, ``None`` for synthetic tables.
    indices : array_like of int
    values : array_like of complex
    method : str
        ``'product'`` or ``'oracle'``.
    truncation : int or array_like of int
        Product factors used per index, or the oracle stage.
    tail_bound : array_like of float
        Error bound per index.
    '''

    def __init__(self, ratio, indices, values, method, truncation, tail_bound, check=True):
        indices = np.array(indices, dtype=int).ravel()
        values = np.array(values, dtype=complex).ravel()
        if indices.size == 0 or indices.size != values.size:
            raise ValueError('indices and values must be nonempty and of equal length')
        tail_bound = np.broadcast_to(np.asarray(tail_bound, dtype=float), indices.shape).copy()
        truncation = np.broadcast_to(np.asarray(truncation, dtype=int), indices.shape).copy()
        for array in (indices, values, tail_bound, truncation):
            array.setflags(write=False)
        self.ratio = ratio
        self.indices = indices
        self.values = values
        self.method = method
        self.truncation = truncation
        self.tail_bound = tail_bound
        self._position = {int(k): i for i, k in enumerate(indices)}
        if check:
            self.check_invariants()

    def check_invariants(self, tol=1e-9):
        if 0 in self._position and abs(self[0] - 1) > tol:
            raise ValueError(f'mu^(0) must equal 1 (got {self[0]!r})')
        if np.any(np.abs(self.values) > 1 + tol):
            raise ValueError('coefficients of a probability measure satisfy |mu^(n)| <= 1')
        for k, i in self._position.items():
            j = self._position.get(-k)
            if j is not None and abs(self.values[i] - np.conj(self.values[j])) > tol:
                raise ValueError(f'conjugate symmetry fails at n={k}')

    def __getitem__(self, n):
        return self.values[self._position[int(n)]]

    def __contains__(self, n):
        return int(n) in self._position

    def __len__(self):
        return self.indices.size

    def abs(self):
        return np.abs(self.values)

    def __repr__(self):
        return (f'FourierCoefficientTable(xi={self.ratio}, method={self.method!r}, '
                f'n={self.indices.min()}..{self.indices.max()})')


def _product_chunk(xi, ns, tol):
    out = [fs_coeff_product(xi, int(n), tol) for n in ns]
    return ([c.value for c in out], [c.tail_bound for c in out], [c.terms for c in out])


def coefficient_table(xi, indices, method='product', tol=None, stage=None,
                      threads=None, max_stage=None):
    '''
    Batch evaluation of Fourier-Stieltjes coefficients.

    Parameters
    ----------
    xi : RatioParam or str
    indices : iterable of int or range
    method : {'product', 'oracle'}
    tol : float, optional
        Product tolerance, or the oracle target bound 2 pi |n| xi**m when
        ``stage`` is not given (default 2e-3 for the oracle).
    stage : int, optional
        Oracle stage.
    threads : int, default ``Settings.threads``
        Chunks are evaluated concurrently and merged in index order.

    Returns
    -------
    table : FourierCoefficientTable
    '''
    xi = as_ratio(xi)
    indices = np.array(list(indices), dtype=int)
    if indices.size == 0:
        raise ValueError('index range must be nonempty')
    threads = DEFAULT_SETTINGS.threads if threads is None else validate._int_number(
        threads, n_min=1, name='threads')

    if method == 'product':
        tol = DEFAULT_SETTINGS.product_tol if tol is None else tol
        chunks = np.array_split(indices, max(1, min(threads * 4, indices.size)))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(lambda c: _product_chunk(xi, c, tol), chunks))
        else:
            parts = [_product_chunk(xi, c, tol) for c in chunks]
        values = np.concatenate([p[0] for p in parts])
        tails = np.concatenate([p[1] for p in parts])
        terms = np.concatenate([p[2] for p in parts]).astype(int)
        LOGGER.debug('product table xi=%s: %d indices, at most %d factors',
                     xi, indices.size, terms.max())
        return FourierCoefficientTable(xi, indices, values, 'product', terms, tails)

    if method == 'oracle':
        if stage is None:
            target = 2e-3 if tol is None else tol
            stage = choose_oracle_stage(xi, np.abs(indices).max(), target, max_stage)
        max_stage = DEFAULT_SETTINGS.max_oracle_stage if max_stage is None else max_stage
        stage = validate._int_number(stage, n_min=0, n_max=max_stage, name='stage')
        LOGGER.debug('oracle table xi=%s at stage %d', xi, stage)
        values = _oracle_values(IntervalSet(xi, stage), indices)
        tails = 2 * np.pi * np.abs(indices) * float(xi)**stage
        return FourierCoefficientTable(xi, indices, values, 'oracle', stage, tails)

    raise ValueError(f'method {method!r} not accepted, use product or oracle')


def decay_profile(table, first_block=None, last_block=None):
    '''
    Maxima of |mu^(n)| over dyadic blocks [2**k, 2**(k+1)).

    Parameters
    ----------
    table : FourierCoefficientTable
    first_block, last_block : int, optional
        Block exponents; by default every block fully covered by the table.

    Returns
    -------
    blocks : list of DecayBlock
    '''
    present = set(int(k) for k in table.indices if k > 0)
    if not present:
        raise ValueError('table has no positive indices')
    if first_block is None:
        first_block = 0
    if last_block is None:
        last_block = int(math.floor(math.log2(max(present) + 1))) - 1
    if last_block < first_block:
        raise ValueError('table does not cover a complete dyadic block')
    blocks = []
    for k in range(first_block, last_block + 1):
        start, stop = 2**k, 2**(k + 1)
        if any(n not in present for n in range(start, stop)):
            raise ValueError(f'table does not cover the block [{start}, {stop})')
        block_max = max(abs(table[n]) for n in range(start, stop))
        blocks.append(DecayBlock(k, start, stop, float(block_max)))
    return blocks
