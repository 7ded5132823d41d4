import enum
import logging
import warnings
from collections import namedtuple

import mpmath
import sympy

from rajchmanpy.utils import validate, DEFAULT_SETTINGS
from ._cantor import as_ratio


__all__ = ['pisot_check', 'rajchman_classify', 'parse_polynomial',
           'PisotStatus', 'PisotResult', 'Verdict', 'ClassificationVerdict']

LOGGER = logging.getLogger(__name__)

_X = sympy.Symbol('x')


class PisotStatus(str, enum.Enum):
    PISOT = 'Pisot'
    NOT_PISOT = 'NotPisot'
    INCONCLUSIVE = 'Inconclusive'


class Verdict(str, enum.Enum):
    NOT_RAJCHMAN_INTEGER_RECIPROCAL = 'NotRajchman_IntegerReciprocal'
    NOT_RAJCHMAN_PISOT_RECIPROCAL = 'NotRajchman_PisotReciprocal'
    RAJCHMAN_RATIONAL_NON_INTEGER_RECIPROCAL = 'Rajchman_RationalNonIntegerReciprocal'
    RAJCHMAN_NOT_PISOT_RECIPROCAL = 'Rajchman_NotPisotReciprocal'
    UNKNOWN = 'Unknown'

    @property
    def is_rajchman(self):
        if self is Verdict.UNKNOWN:
            return None
        return self.value.startswith('Rajchman')


PisotResult = namedtuple('PisotResult', ['status', 'dominant_root', 'roots',
                                         'conjugate_moduli', 'irreducible'])
ClassificationVerdict = namedtuple('ClassificationVerdict', ['verdict', 'evidence'])


def parse_polynomial(text):
    '''``'1,-1,-1'`` -> ``[1, -1, -1]`` (highest degree first).'''
    try:
        coefficients = [int(c) for c in text.replace(' ', '').split(',') if c != '']
    except ValueError:
        raise ValueError(f'polynomial {text!r} must be comma separated integers')
    if not coefficients:
        raise ValueError('polynomial must have at least one coefficient')
    return coefficients


def pisot_check(coefficients, tol=None, dps=None):
    '''
    Decides whether the dominant root of a monic integer polynomial is a
    Pisot number: a real root theta > 1 whose other roots all lie strictly
    inside the unit disk.

    Parameters
    ----------
    coefficients : sequence of int
        Highest degree first, leading coefficient 1.
    tol : float, default ``Settings.pisot_tol``
        Modulus margin. A conjugate with ||z| - 1| <= tol makes the answer
        Inconclusive (Salem numbers have conjugates on the circle).
    dps : int, default ``Settings.pisot_dps``
        Decimal digits of the root computation.

    Returns
    -------
    result : PisotResult

    Example
    -------
    >>> pisot_check([1, -1, -1]).status
    <PisotStatus.PISOT: 'Pisot'>
    '''
    tol = DEFAULT_SETTINGS.pisot_tol if tol is None else validate._float_number(tol, n_min=0, name='tol')
    dps = DEFAULT_SETTINGS.pisot_dps if dps is None else validate._int_number(dps, n_min=15, name='dps')
    coefficients = [validate._int_number(c, name='coefficient') for c in coefficients]
    while coefficients and coefficients[0] == 0:
        coefficients.pop(0)
    if not coefficients:
        raise ValueError('the zero polynomial has no roots')
    poly = sympy.Poly(coefficients, _X, domain='ZZ')
    if poly.degree() < 1:
        raise ValueError('polynomial must have degree at least 1')
    if not poly.is_monic:
        raise ValueError('polynomial must be monic (Pisot numbers are algebraic integers)')
    irreducible = bool(poly.is_irreducible)
    if not irreducible:
        warnings.warn(f'{poly.as_expr()} is reducible; the verdict refers to its dominant root')

    if poly.degree() == 1:
        theta = -coefficients[1]
        status = PisotStatus.PISOT if theta >= 2 else PisotStatus.NOT_PISOT
        return PisotResult(status, float(theta), [complex(theta)], [], irreducible)

    with mpmath.workdps(dps):
        roots = mpmath.polyroots(coefficients, maxsteps=400, extraprec=2*dps)
        roots = sorted(roots, key=lambda z: -abs(z))
        dominant = roots[0]
        others = roots[1:]
        moduli = [abs(z) for z in others]
        is_real = abs(mpmath.im(dominant)) < mpmath.mpf(10)**(-dps//2)
        theta = mpmath.re(dominant)
        roots_out = [complex(z) for z in roots]
        moduli_out = [float(m) for m in moduli]

        near_circle = any(abs(m - 1) <= tol for m in moduli)
        if is_real and theta > 1 + tol and all(m < 1 - tol for m in moduli):
            status = PisotStatus.PISOT
        elif near_circle:
            status = PisotStatus.INCONCLUSIVE
        else:
            status = PisotStatus.NOT_PISOT
    if status is PisotStatus.INCONCLUSIVE:
        warnings.warn(f'Pisot check of {coefficients} is inconclusive at margin {tol}; '
                      'refine the precision')
    LOGGER.debug('pisot_check %s -> %s (dominant %s)', coefficients, status.value, roots_out[0])
    return PisotResult(status, float(theta) if is_real else complex(dominant),
                       roots_out, moduli_out, irreducible)


def rajchman_classify(xi, tol=None, dps=None):
    '''
    Salem-Bari classification of the Cantor measure of ratio xi: the measure
    fails to be Rajchman exactly when 1/xi is a Pisot number; for rational
    xi exactly when 1/xi is an integer.

    Parameters
    ----------
    xi : RatioParam or str

    Returns
    -------
    result : ClassificationVerdict
        ``(verdict, evidence)`` with a JSON friendly evidence dict.

    Example
    -------
    >>> rajchman_classify('2/5').verdict
    <Verdict.RAJCHMAN_RATIONAL_NON_INTEGER_RECIPROCAL: 'Rajchman_RationalNonIntegerReciprocal'>
    '''
    xi = as_ratio(xi)
    evidence = {'xi': str(xi)}
    if xi.is_rational:
        reciprocal = xi.reciprocal
        evidence['reciprocal'] = f'{reciprocal.numerator}/{reciprocal.denominator}'
        if xi.numerator == 1:
            evidence['reason'] = 'reciprocal is a positive integer'
            return ClassificationVerdict(Verdict.NOT_RAJCHMAN_INTEGER_RECIPROCAL, evidence)
        evidence['reason'] = 'reciprocal is a rational non-integer, never an algebraic integer'
        return ClassificationVerdict(Verdict.RAJCHMAN_RATIONAL_NON_INTEGER_RECIPROCAL, evidence)

    if xi.tag is None:
        evidence['reason'] = 'irrational ratio without minimal polynomial tag'
        return ClassificationVerdict(Verdict.UNKNOWN, evidence)
    evidence['polynomial'] = list(xi.tag)
    try:
        result = pisot_check(xi.tag, tol=tol, dps=dps)
    except ValueError as exc:
        evidence['reason'] = str(exc)
        return ClassificationVerdict(Verdict.UNKNOWN, evidence)
    evidence['dominant_root'] = result.dominant_root
    evidence['conjugate_moduli'] = result.conjugate_moduli
    evidence['irreducible'] = result.irreducible
    evidence['pisot'] = result.status.value
    if result.status is PisotStatus.PISOT:
        evidence['reason'] = 'reciprocal is a Pisot number'
        return ClassificationVerdict(Verdict.NOT_RAJCHMAN_PISOT_RECIPROCAL, evidence)
    if result.status is PisotStatus.NOT_PISOT:
        evidence['reason'] = 'reciprocal is not a Pisot number'
        return ClassificationVerdict(Verdict.RAJCHMAN_NOT_PISOT_RECIPROCAL, evidence)
    evidence['reason'] = 'a conjugate lies within the margin of the unit circle'
    return ClassificationVerdict(Verdict.UNKNOWN, evidence)
