import logging
from collections import namedtuple

import numpy as np

from rajchmanpy.core.ratio import IntervalSet
from rajchmanpy.core.series import CoefficientSeries
from rajchmanpy.wiener import (evaluate, sup_norm_estimate, boundary_values, reciprocal_one_plus,
                               mobius_postcompose, compose_power_series, fejer_means,
                               AnalyticGerm)
from rajchmanpy.exportapi import series_to_dict
from rajchmanpy.utils import validate, DEFAULT_SETTINGS, DiagnosticCapError
from ._admissibility import PeakParams
from ._herglotz import herglotz_weight_moments


__all__ = ['PeakCandidate', 'build_peak_candidate', 'weak_to_peak', 'vanish_at_origin',
           'compose_peak', 'weak_peak_check', 'WeakPeakCheck', 'SUMMATIONS']

LOGGER = logging.getLogger(__name__)

SUMMATIONS = ('fejer', 'none')

# radii of the disk grid for min Re F, the circle itself last
_DISK_RADII = (0.0, 0.5, 0.9, 0.99, 0.999, 1.0)

WeakPeakCheck = namedtuple('WeakPeakCheck', ['deviation', 'sup_lower', 'sup_upper', 'modulus',
                                             'excess'])


def _summation(summation):
    summation = DEFAULT_SETTINGS.summation if summation is None else summation
    if summation not in SUMMATIONS:
        raise ValueError(f'summation must be one of {SUMMATIONS}, not {summation!r}')
    return summation


def _summed(series, summation):
    return fejer_means(series) if summation == 'fejer' else series


def _grid_size(degree):
    return max(64, 1 << int(np.ceil(np.log2(8 * (degree + 1)))))


def _min_real_part(F):
    '''Minimum of Re F over circles of the radii in _DISK_RADII.'''
    M = _grid_size(F.degree)
    j = np.arange(F.degree + 1)
    lowest = np.inf
    for r in _DISK_RADII:
        scaled = CoefficientSeries(F.coefficients * r**j)
        lowest = min(lowest, float(boundary_values(scaled, M).real.min()))
    return lowest


def _partial_l1(series):
    '''Partial l1 norms over the dyadic degrees 1, 2, 4, ..., D.'''
    magnitudes = np.cumsum(np.abs(series.coefficients))
    degrees = [1 << k for k in range(int(np.log2(max(1, series.degree))) + 1)]
    if degrees[-1] != series.degree:
        degrees.append(series.degree)
    return {str(d): float(magnitudes[min(d, series.degree)]) for d in degrees}


class PeakCandidate:
    '''
    Creates a PeakCandidate object, a truncated peak function candidate G
    with G = beta on the peak set.

    Parameters
    ----------
    series : CoefficientSeries
        The coefficients that are reported and paired, after summation.
    raw_series : CoefficientSeries, optional
        The exact truncation before summation. Defaults to ``series``.
    beta : complex, default 1
        Peak value.
    probe_points : array_like of complex, optional
        Points where the peak deficiency max |beta - G| is measured.
    summation : str, default 'none'
        How ``series`` was obtained from ``raw_series``.
    herglotz : CoefficientSeries, optional
        The Herglotz function F behind G = F/(1 + F).
    params : PeakParams, optional
    settings : Settings, default ``DEFAULT_SETTINGS``
        Supplies the caps and the boundary grid.
    grid : int, default ``settings.sup_grid``
        Boundary grid of the sup norm bracket.

    Note
    ----
    Diagnostics are computed on first access. They are reported, never
    asserted; ``check_caps`` compares them with the hard caps.
    '''

    def __init__(self, series, raw_series=None, beta=1.0, probe_points=None,
                 summation='none', herglotz=None, params=None, settings=None, grid=None):
        self.series = validate._is_instance(series, CoefficientSeries, 'series')
        self.raw_series = series if raw_series is None else validate._is_instance(
            raw_series, CoefficientSeries, 'raw_series')
        self.beta = validate._complex_number(beta, name='beta')
        self.probe_points = (np.array([], dtype=complex) if probe_points is None
                             else np.asarray(probe_points, dtype=complex).ravel())
        self.summation = _summation(summation)
        self.herglotz = herglotz
        self.params = params
        self.settings = DEFAULT_SETTINGS if settings is None else settings
        self.grid = self.settings.sup_grid if grid is None else validate._int_number(
            grid, n_min=8, name='grid')
        self.extra = {}
        self.__diagnostics = None #Calculated property

    @classmethod
    def from_series(cls, series, beta=1.0, probe_points=(1.0,), grid=None):
        '''A candidate around a given series, peaking at ``probe_points``.'''
        return cls(series, beta=beta, probe_points=probe_points, grid=grid)

    @property
    def degree(self):
        return self.series.degree

    @property
    def diagnostics(self):
        if self.__diagnostics is None:
            self.__diagnostics = self._compute_diagnostics()
        return self.__diagnostics

    def _compute_diagnostics(self):
        bracket = sup_norm_estimate(self.series, self.grid)
        diagnostics = {
            'sup_lower': bracket.lower,
            'sup_upper': bracket.tight_upper,
            'sup_derivative_upper': bracket.upper,
            'sup_grid': self.grid,
            'origin_modulus': abs(complex(self.series[0])),
            'constant_coefficient': [self.series[0].real, self.series[0].imag],
            'l1_norm': self.series.l1_norm,
            'partial_l1_norms': _partial_l1(self.raw_series),
            'summation': self.summation,
        }
        if self.probe_points.size:
            values = evaluate(self.series, self.probe_points)
            diagnostics['peak_deficiency'] = float(np.abs(self.beta - values).max())
            diagnostics['probe_count'] = int(self.probe_points.size)
        if self.herglotz is not None:
            F = _summed(self.herglotz, self.summation)
            diagnostics['min_real_part'] = _min_real_part(F)
        diagnostics.update(self.extra)
        LOGGER.debug('candidate diagnostics: sup in [%.17g, %.17g], deficiency %s',
                     bracket.lower, bracket.tight_upper, diagnostics.get('peak_deficiency'))
        return diagnostics

    def check_caps(self):
        '''
        Names of the violated hard caps: sup grid maximum above 1 + sup_slack,
        peak deficiency above deficiency_cap, min Re F below -real_part_slack,
        |G(0)| not below 1.
        '''
        settings = self.settings
        d = self.diagnostics
        failed = []
        if d['sup_lower'] > abs(self.beta) + settings.sup_slack:
            failed.append('sup_norm')
        if d.get('peak_deficiency', 0.0) > settings.deficiency_cap:
            failed.append('peak_deficiency')
        if d.get('min_real_part', 0.0) < -settings.real_part_slack:
            failed.append('min_real_part')
        if d['origin_modulus'] >= 1:
            failed.append('origin_modulus')
        return failed

    def with_series(self, raw_series, **extra):
        '''New candidate sharing everything but the coefficients.'''
        candidate = PeakCandidate(_summed(raw_series, self.summation), raw_series,
                                  self.beta, self.probe_points, self.summation,
                                  self.herglotz, self.params, self.settings, self.grid)
        candidate.extra.update(self.extra)
        candidate.extra.update(extra)
        return candidate

    def to_dict(self, coefficients=True):
        document = {
            'beta': [self.beta.real, self.beta.imag],
            'degree': self.degree,
            'summation': self.summation,
            'diagnostics': dict(self.diagnostics),
        }
        if self.params is not None:
            document['params'] = self.params.to_dict()
        if coefficients:
            document['series'] = series_to_dict(self.series)
        return document

    def __repr__(self):
        return f'PeakCandidate(degree={self.degree}, beta={self.beta}, summation={self.summation!r})'


def build_peak_candidate(params, summation=None, enforce_caps=True, settings=None,
                         threads=None, weight=None):
    '''
    Peak function candidate for the Cantor set of ratio xi.

    F is the Herglotz transform of the weight d_E**(-alpha), with Taylor
    coefficients (c_0, 2 c_1, 2 c_2, ...), and G = F/(1 + F) = 1 - 1/(1 + F)
    truncated to degree D. Re F > 0 makes |G| < 1 on the disk and G is close
    to 1 where the weight blows up, on E.

    Parameters
    ----------
    params : PeakParams
    summation : {'fejer', 'none'}, default ``Settings.summation``
        'fejer' reports the Fejer means of the truncation, whose boundary
        sup norm stays below 1 because the discretized weight is positive.
    enforce_caps : bool, default True
        Raise when a diagnostic exceeds its hard cap.
    settings : Settings, default ``DEFAULT_SETTINGS``
    threads : int, default ``settings.threads``
    weight : HerglotzWeight, optional
        Precomputed weight moments for ``params``.

    Returns
    -------
    candidate : PeakCandidate
        Probe points are the stage K end points at radius 1 - 1/D.

    Raises
    ------
    DiagnosticCapError
        With the candidate in ``report``.
    '''
    validate._is_instance(params, PeakParams, 'params')
    settings = DEFAULT_SETTINGS if settings is None else settings
    summation = _summation(settings.summation if summation is None else summation)
    if weight is None:
        weight = herglotz_weight_moments(params, threads=settings.threads if threads is None
                                         else threads)
    c = weight.moments
    F = CoefficientSeries(np.concatenate([c[:1], 2 * c[1:]]))
    G = 1.0 - reciprocal_one_plus(F)
    D = params.degree
    stage = IntervalSet(params.xi, params.generations)
    probes = (1 - 1 / D) * np.exp(2j * np.pi * stage.endpoints())
    candidate = PeakCandidate(_summed(G, summation), G, 1.0, probes, summation,
                              herglotz=F, params=params, settings=settings)
    candidate.extra.update({
        'weight_mass': weight.mass,
        'weight_total_mass': weight.total_mass,
        'weight_tail_ratio': weight.tail_ratio,
        'weight_mass_defect': weight.mass_defect,
        'quadrature_nodes': int(weight.nodes.size),
        'probe_radius': 1 - 1 / D,
    })
    _record_caps(candidate, enforce_caps)
    return candidate


def _record_caps(candidate, enforce_caps=False):
    failed = candidate.check_caps()
    candidate.diagnostics['caps_failed'] = failed
    if failed:
        LOGGER.warning('peak candidate exceeds caps: %s', ', '.join(failed))
        if enforce_caps:
            raise DiagnosticCapError(f'diagnostic caps exceeded: {", ".join(failed)}', candidate)


def weak_to_peak(f, beta, slack=None, grid=4096):
    '''
    (f/beta + 1)/2: a weak peak function f, |f| <= |beta| with f = beta on E,
    becomes a peak function equal to 1 exactly where f = beta.

    Parameters
    ----------
    f : CoefficientSeries
    beta : complex
        Nonzero.
    slack : float, default ``Settings.sup_slack``
    grid : int, default 4096

    Returns
    -------
    g : CoefficientSeries

    Example
    -------
    >>> weak_to_peak(CoefficientSeries([0, 1]), 1).coefficients
    array([0.5+0.j, 0.5+0.j])
    '''
    validate._is_instance(f, CoefficientSeries, 'f')
    beta = validate._complex_number(beta, name='beta')
    if beta == 0:
        raise ValueError('beta = 0 is the trivial functional')
    slack = DEFAULT_SETTINGS.sup_slack if slack is None else slack
    bracket = sup_norm_estimate(f, grid)
    if bracket.lower > abs(beta) + slack:
        raise ValueError(f'sup |f| >= {bracket.lower:.6g} exceeds |beta| = {abs(beta):.6g}')
    return (f / beta + 1.0) / 2


def vanish_at_origin(candidate):
    '''
    Peak candidate with G(0) = 0 and the same peak value, by post composing
    the raw truncation with the disk automorphism sending G(0) to 0 and 1
    to 1 (``mobius_postcompose``). The summation policy is applied again and
    diagnostics are recomputed.

    Parameters
    ----------
    candidate : PeakCandidate
        0 < |G(0)| < 1.

    Returns
    -------
    normalized : PeakCandidate
        Constant coefficient exactly 0.
    '''
    validate._is_instance(candidate, PeakCandidate, 'candidate')
    g0 = complex(candidate.raw_series[0])
    if g0 == 0:
        raise ValueError('G(0) = 0 already, nothing to normalize')
    if abs(g0) >= 1:
        raise ValueError(f'|G(0)| = {abs(g0):.6g} must be below 1')
    if candidate.beta != 1:
        raise ValueError('normalize the peak value to 1 first (weak_to_peak)')
    raw = mobius_postcompose(candidate.raw_series, g0)
    normalized = candidate.with_series(raw, vanish_at_origin=True, original_origin_value=[
        g0.real, g0.imag])
    _record_caps(normalized)
    LOGGER.debug('vanish at origin: g0 = %s', g0)
    return normalized


def _check_self_map(germ, radii=(0.25, 0.5, 0.75, 0.9, 0.99), angles=256, tol=1e-12):
    at_one = complex(germ(1.0))
    if abs(at_one - 1) > tol:
        raise ValueError(f'the outer function must fix 1, got F(1) = {at_one:.6g}')
    theta = np.exp(2j * np.pi * np.arange(angles) / angles)
    for r in radii:
        if r >= germ.radius:
            continue
        top = float(np.abs(germ(r * theta)).max())
        if top >= 1:
            raise ValueError(f'the outer function must map the disk into itself, '
                             f'|F| = {top:.6g} at radius {r}')


def compose_peak(candidate, germ):
    '''
    Another peak candidate F o G for an analytic F with F(1) = 1 and |F| < 1
    on the open disk (checked on a grid), e.g. F(w) = w**k.

    Parameters
    ----------
    candidate : PeakCandidate
    germ : AnalyticGerm or array_like

    Returns
    -------
    composed : PeakCandidate
    '''
    validate._is_instance(candidate, PeakCandidate, 'candidate')
    if not isinstance(germ, AnalyticGerm):
        germ = AnalyticGerm(germ)
    if candidate.beta != 1:
        raise ValueError('normalize the peak value to 1 first (weak_to_peak)')
    _check_self_map(germ)
    raw = compose_power_series(germ, candidate.raw_series)
    composed = candidate.with_series(raw, outer_terms=int(germ.coefficients.size))
    _record_caps(composed)
    return composed


def weak_peak_check(f, beta, points, grid=4096):
    '''
    Weak peak diagnostics of f for the value beta on the given points.

    Parameters
    ----------
    f : CoefficientSeries
    beta : complex
    points : array_like of complex
        Points of the closed disk, typically on the candidate peak set.
    grid : int, default 4096

    Returns
    -------
    check : WeakPeakCheck
        ``deviation`` max |f - beta| on the points, the sup norm bracket,
        ``modulus`` = |beta| and ``excess`` = sup_lower - |beta|.
    '''
    validate._is_instance(f, CoefficientSeries, 'f')
    beta = validate._complex_number(beta, name='beta')
    values = evaluate(f, np.asarray(points, dtype=complex))
    bracket = sup_norm_estimate(f, grid)
    return WeakPeakCheck(float(np.abs(np.atleast_1d(values) - beta).max()), bracket.lower,
                         bracket.tight_upper, abs(beta), bracket.lower - abs(beta))
