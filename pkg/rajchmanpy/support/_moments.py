import logging

import numpy as np

from rajchmanpy.core.measures import (DiskAtomSet, MomentVector, DiscretizationGrid,
                                      CantorSpec, LebesgueMeasure)
from rajchmanpy.core.ratio import IntervalSet
from rajchmanpy.circlemeasure import coefficient_table, fs_coeff_oracle, stage_measure_cdf
from rajchmanpy.utils import validate, DEFAULT_SETTINGS


__all__ = ['phi_lambda', 'moment_vector', 'quotient_moments', 'discretize_measure',
           'arc_masses', 'random_convex_combination']

LOGGER = logging.getLogger(__name__)


def phi_lambda(lam, D):
    '''
    Geometric moment vector phi_lambda = (lambda**j), j = 0..D, the moment
    vector of the point mass at lambda.

    Parameters
    ----------
    lam : complex
        Point of the open unit disk.
    D : int

    Returns
    -------
    y : MomentVector
    '''
    lam = validate._complex_number(lam, max_modulus=1, strict=True, name='lambda')
    D = validate._int_number(D, n_min=0, name='D')
    entries = lam ** np.arange(D + 1)
    entries[0] = 1.0
    return MomentVector(entries, source=f'delta({lam:.6g})')


def _atom_moments(atoms, weights, D):
    entries = np.empty(D + 1, dtype=complex)
    current = weights.astype(complex)
    for j in range(D + 1):
        entries[j] = current.sum()
        current = current * atoms
    return entries


def moment_vector(measure, D, tol=None, threads=None):
    '''
    Moment vector y_j = integral of lambda**j d(measure), j = 0..D.

    Parameters
    ----------
    measure : DiskAtomSet, CantorSpec or LebesgueMeasure
        For a CantorSpec the entries are sigma^(-j), from the product formula
        for the limit measure and from the stage integration for a stage.
    D : int
    tol : float, default ``Settings.product_tol``
        Per index product tolerance for Cantor measures.

    Returns
    -------
    y : MomentVector
        ``error_bound`` holds the largest per index error bound.
    '''
    D = validate._int_number(D, n_min=0, n_max=DEFAULT_SETTINGS.max_degree, name='D')
    if isinstance(measure, DiskAtomSet):
        entries = _atom_moments(measure.atoms, measure.weights, D)
        entries[0] = 1.0
        return MomentVector(entries, source=repr(measure))
    if isinstance(measure, LebesgueMeasure):
        entries = np.zeros(D + 1, dtype=complex)
        entries[0] = 1.0
        return MomentVector(entries, source='lebesgue')
    if isinstance(measure, CantorSpec):
        if measure.stage is None:
            table = coefficient_table(measure.ratio, range(0, -D - 1, -1), 'product',
                                      tol=tol, threads=threads)
            LOGGER.debug('Cantor moments for xi=%s to degree %d', measure.ratio, D)
            return MomentVector(table.values, source=repr(measure),
                                error_bound=float(table.tail_bound.max()))
        entries = fs_coeff_oracle(measure.ratio, measure.stage, -np.arange(D + 1))
        return MomentVector(entries, source=repr(measure))
    raise ValueError(f'moments of {type(measure).__name__} are not supported')


def quotient_moments(y):
    '''Image of y under the quotient by constants: y_0 := 0.'''
    entries = np.array(y.entries)
    entries[0] = 0.0
    return MomentVector(entries, source=f'q({y.source})', probability=False,
                        error_bound=y.error_bound)


def arc_masses(measure, n):
    '''
    Masses nu(Delta_{n,k}) of the n equal half open arcs, k = 1..n.

    Parameters
    ----------
    measure : LebesgueMeasure, CantorSpec (with stage), DiskAtomSet on the
        circle, or a callable mapping the n+1 arc bounds in [0, 1] to n masses.
    n : int
    '''
    bounds = np.arange(n + 1) / n
    if isinstance(measure, LebesgueMeasure):
        return np.full(n, 1.0 / n)
    if isinstance(measure, CantorSpec):
        if measure.stage is None:
            raise ValueError('arc masses of the limit Cantor measure need a stage')
        cdf = stage_measure_cdf(IntervalSet(measure.ratio, measure.stage), bounds)
        return np.diff(cdf)
    if isinstance(measure, DiskAtomSet):
        if not np.allclose(np.abs(measure.atoms), 1.0, atol=1e-12):
            raise ValueError('arc masses need atoms on the unit circle')
        t = np.mod(np.angle(measure.atoms) / (2 * np.pi), 1.0)
        index = np.minimum((t * n).astype(int), n - 1)
        return np.bincount(index, weights=measure.weights, minlength=n)
    if callable(measure):
        masses = np.asarray(measure(bounds), dtype=float)
        if masses.shape != (n,):
            raise ValueError(f'arc mass evaluator returned shape {masses.shape}, expected ({n},)')
        return masses
    raise ValueError(f'arc masses of {type(measure).__name__} are not supported')


def discretize_measure(measure, n):
    '''
    Replaces a probability measure on the circle by the atoms
    zeta_{n,k} = r_n exp((2k-1) pi i/n), r_n = cos(pi/n), carrying the
    masses of the arcs Delta_{n,k}.

    Parameters
    ----------
    measure : see ``arc_masses``
    n : int
        Number of arcs, at least 2.

    Returns
    -------
    atoms : DiskAtomSet
        Every atom lies in the open disk within pi/n of each point of its arc.
    '''
    grid = DiscretizationGrid(n)
    masses = arc_masses(measure, grid.n)
    if np.any(masses < -1e-15):
        raise ValueError('arc mass evaluator returned negative masses')
    masses = np.clip(masses, 0.0, None)
    total = masses.sum()
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f'arc masses sum to {total!r}, a probability measure is required')
    return DiskAtomSet(grid.atoms(), masses / total, interior=True)


def random_convex_combination(rng, size, max_modulus=1.0, interior=True):
    '''
    Random element of co(phi_lambda): ``size`` atoms uniform in the disk of
    radius ``max_modulus`` with Dirichlet weights.
    '''
    radius = max_modulus * np.sqrt(rng.random(size))
    if interior:
        radius = np.minimum(radius, np.nextafter(1.0, 0.0))
    atoms = radius * np.exp(2j * np.pi * rng.random(size))
    weights = rng.dirichlet(np.ones(size))
    weights = weights / weights.sum()
    return DiskAtomSet(atoms, weights, interior=interior)
