import numpy as np

from rajchmanpy.utils import RajchmanValidator
from rajchmanpy.core.ratio import RatioParam


__all__ = ['DiskAtomSet', 'MomentVector', 'DiscretizationGrid', 'CantorSpec', 'LebesgueMeasure']


class Measure(RajchmanValidator):
    pass


class DiskAtomSet(Measure):
    '''
    Finitely supported probability measure sum_k w_k delta(zeta_k) on the
    closed unit disk. Its moment vector is the convex combination
    sum_k w_k phi_{zeta_k} of geometric moment vectors.

    Parameters
    ----------
    atoms : array_like of complex
        Points zeta_k with |zeta_k| <= 1.
    weights : array_like of float
        Nonnegative weights summing to one (within 1e-12).
    interior : bool, default False
        Require |zeta_k| < 1 for every atom.

    Example
    -------
    >>> from rajchmanpy import DiskAtomSet
    >>> x = DiskAtomSet([0.5, -0.5j], [0.25, 0.75])
    >>> x.max_modulus
    0.5
    '''

    def __init__(self, atoms, weights, interior=False):
        atoms = np.array(atoms, dtype=complex).ravel()
        weights = self._probability_weights(weights)
        if atoms.size != weights.size:
            raise ValueError('number of atoms and number of weights must match')
        moduli = np.abs(atoms)
        if interior and np.any(moduli >= 1):
            raise ValueError('atoms must lie in the open unit disk')
        if np.any(moduli > 1):
            raise ValueError('atoms must lie in the closed unit disk')
        atoms.setflags(write=False)
        weights.setflags(write=False)
        self.__atoms = atoms
        self.__weights = weights

    @classmethod
    def dirac(cls, point):
        return cls([point], [1.0])

    #Property getters
    @property
    def atoms(self):
        return self.__atoms
    @property
    def weights(self):
        return self.__weights
    @property
    def max_modulus(self):
        return float(np.abs(self.__atoms).max())

    def __len__(self):
        return self.__atoms.size

    def __repr__(self):
        return f'DiskAtomSet(atoms={len(self)}, max_modulus={self.max_modulus:.6g})'


class MomentVector(RajchmanValidator):
    '''
    Entries y_0, ..., y_D of a point of c_0, y_j = integral of lambda**j
    against a probability measure (for circle measures y_j = mu^(-j)).

    Parameters
    ----------
    entries : array_like of complex
    source : str, default ''
        Human readable description of the generating measure.
    probability : bool, default True
        Check y_0 = 1.
    error_bound : float, default 0
        Uniform bound on the error of the entries (truncated products,
        stage approximations).
    '''

    def __init__(self, entries, source='', probability=True, error_bound=0.0, tol=1e-9):
        entries = np.array(entries, dtype=complex).ravel()
        if entries.size == 0:
            raise ValueError('a moment vector needs at least y_0')
        if np.any(np.abs(entries) > 1 + tol):
            raise ValueError('moment entries must satisfy |y_j| <= 1')
        if probability and abs(entries[0] - 1) > tol:
            raise ValueError(f'y_0 must equal 1 for a probability measure (got {entries[0]!r})')
        entries.setflags(write=False)
        self.__entries = entries
        self.__source = str(source)
        self.__error_bound = self._float_number(error_bound, n_min=0, name='error_bound')

    #Property getters
    @property
    def entries(self):
        return self.__entries
    @property
    def source(self):
        return self.__source
    @property
    def error_bound(self):
        '''Bound on max_j |y_j - exact y_j| from the computation of the entries.'''
        return self.__error_bound
    @property
    def degree(self):
        return self.__entries.size - 1

    def __len__(self):
        return self.__entries.size

    def __getitem__(self, j):
        return self.__entries[j]

    def __repr__(self):
        return f'MomentVector(degree={self.degree}, source={self.source!r})'


class DiscretizationGrid(RajchmanValidator):
    '''
    n equal arcs [e(2(k-1)pi/n), e(2k pi/n)) of the circle and the interior
    points zeta_k = r_n exp((2k-1) pi i/n), r_n = cos(pi/n).

    With this radius 1 + r**2 - 2 r cos(pi/n) = sin(pi/n)**2, so every point
    of an arc is within pi/n of its atom.
    '''

    def __init__(self, n):
        self.__n = self._int_number(n, n_min=2, name='n')

    #Property getters
    @property
    def n(self):
        return self.__n
    @property
    def radius(self):
        return float(np.cos(np.pi / self.__n))

    def arc_bounds(self):
        '''Arc endpoints k/n, k = 0..n, in the [0, 1) parametrization of the circle.'''
        return np.arange(self.__n + 1) / self.__n

    def angles(self):
        k = np.arange(1, self.__n + 1)
        return (2*k - 1) * np.pi / self.__n

    def atoms(self):
        return self.radius * np.exp(1j * self.angles())

    def max_distance(self):
        '''sup over arcs of |zeta_k - t|, attained at the arc ends.'''
        return float(np.sin(np.pi / self.__n))

    def __repr__(self):
        return f'DiscretizationGrid(n={self.n}, radius={self.radius:.12g})'


class CantorSpec(Measure):
    '''
    Cantor measure of constant ratio carried to the circle by t -> e(t).

    Parameters
    ----------
    ratio : RatioParam, str or Fraction
        A ``'p/q'`` string or a Fraction is converted to a RatioParam.
    stage : int, optional, default None
        ``None`` stands for the limit measure sigma(xi); an integer m for the
        normalized Lebesgue measure sigma_m on the stage set E_m.
    '''

    def __init__(self, ratio, stage=None):
        if not isinstance(ratio, RatioParam):
            ratio = RatioParam(ratio)
        self.__ratio = ratio
        self.__stage = None if stage is None else self._int_number(stage, n_min=0, name='stage')

    #Property getters
    @property
    def ratio(self):
        return self.__ratio
    @property
    def stage(self):
        return self.__stage

    def __repr__(self):
        stage = 'limit' if self.__stage is None else f'stage {self.__stage}'
        return f'CantorSpec(xi={self.__ratio}, {stage})'


class LebesgueMeasure(Measure):
    '''Normalized Lebesgue measure m on the circle.'''

    def __repr__(self):
        return 'LebesgueMeasure()'
