from fractions import Fraction

import numpy as np
import mpmath

from rajchmanpy.utils import RajchmanValidator


__all__ = ['RatioParam', 'IntervalSet']


class RatioParam(RajchmanValidator):
    '''
    Creates a RatioParam object, the ratio of a Cantor set of constant ratio.

    Parameters
    ----------
    value : str, int, Fraction
        The ratio as an exact rational, e.g. ``'1/3'`` or ``Fraction(2, 13)``.
    denominator : int, optional, default None
        When given, ``value`` is read as the numerator.
    tag : sequence of int, optional, default None
        Integer coefficients (highest degree first) of the minimal polynomial
        of the reciprocal ratio. A tagged ratio is irrational and the stored
        rational only approximates it for floating point evaluations.

    Examples
    --------
    >>> from rajchmanpy import RatioParam
    >>> xi = RatioParam('1/3')
    >>> xi.reciprocal
    Fraction(3, 1)
    >>> RatioParam(4, 12) == xi
    True
    '''

    def __init__(self, value, denominator=None, tag=None):
        if denominator is not None:
            numerator = self._int_number(value, n_min=1, name='numerator')
            denominator = self._int_number(denominator, n_min=1, name='denominator')
            value = Fraction(numerator, denominator)
        elif isinstance(value, str):
            value = self._parse(value)
        self.__value = self._ratio(value)
        if tag is not None:
            tag = tuple(self._int_number(c, name='tag coefficient') for c in tag)
            if len(tag) < 2 or tag[0] == 0:
                raise ValueError('tag must be a polynomial of degree at least 1')
            theta = self._dominant_root(tag)
            if theta is None or abs(theta * self.__value - 1) > self._TAG_TOL:
                raise ValueError(f'the largest real root of tag {list(tag)} is not 1/{self.__value}')
        self.__tag = tag

    # relative agreement between 1/xi and the tag root
    _TAG_TOL = 1e-9

    @staticmethod
    def _dominant_root(coefficients, dps=30):
        '''Largest real root of an integer polynomial as a float, None if there is none.'''
        with mpmath.workdps(dps):
            roots = mpmath.polyroots(list(coefficients), maxsteps=200, extraprec=2*dps)
            real_roots = [mpmath.re(r) for r in roots
                          if abs(mpmath.im(r)) < mpmath.mpf(10)**(-dps//2)]
        return float(max(real_roots)) if real_roots else None

    @staticmethod
    def _parse(text):
        text = text.strip()
        if '/' not in text or '.' in text or 'e' in text.lower():
            raise ValueError(f'ratio {text!r} must be written as p/q')
        p, _, q = text.partition('/')
        try:
            return Fraction(int(p), int(q))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f'ratio {text!r} must be written as p/q')

    @classmethod
    def from_polynomial(cls, coefficients, dps=50, max_denominator=10**15):
        '''
        Irrational ratio whose reciprocal is the largest real root of an
        integer polynomial.

        Parameters
        ----------
        coefficients : sequence of int
            Minimal polynomial of the reciprocal ratio, highest degree first.
        dps : int, default 50
            Decimal digits used for the root computation.

        Example
        -------
        >>> xi = RatioParam.from_polynomial([1, -3, 1])  # reciprocal (3+sqrt5)/2
        >>> round(float(xi), 6)
        0.381966
        '''
        coefficients = [int(c) for c in coefficients]
        with mpmath.workdps(dps):
            roots = mpmath.polyroots(coefficients, maxsteps=200, extraprec=2*dps)
            real_roots = [mpmath.re(r) for r in roots
                          if abs(mpmath.im(r)) < mpmath.mpf(10)**(-dps//2)]
            if not real_roots:
                raise ValueError(f'polynomial {coefficients} has no real root')
            theta = max(real_roots)
            if theta <= 2:
                raise ValueError(f'largest real root {mpmath.nstr(theta, 12)} '
                                 'must exceed 2 so that 0 < xi < 1/2')
            approx = Fraction(mpmath.nstr(1/theta, dps)).limit_denominator(max_denominator)
        return cls(approx, tag=coefficients)

    #Property getters
    @property
    def value(self):
        return self.__value
    @property
    def numerator(self):
        return self.__value.numerator
    @property
    def denominator(self):
        return self.__value.denominator
    @property
    def tag(self):
        return self.__tag
    @property
    def is_rational(self):
        return self.__tag is None
    @property
    def reciprocal(self):
        return 1 / self.__value

    def __float__(self):
        return float(self.__value)

    def __str__(self):
        if self.is_rational:
            return f'{self.numerator}/{self.denominator}'
        return f'~{float(self):.17g} (reciprocal root of {list(self.tag)})'

    def __repr__(self):
        if self.is_rational:
            return f'RatioParam({self.numerator}/{self.denominator})'
        return f'RatioParam(~{float(self):.12g}, tag={list(self.tag)})'

    def __eq__(self, other):
        if isinstance(other, RatioParam):
            return self.value == other.value and self.tag == other.tag
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.tag))


class IntervalSet(RajchmanValidator):
    '''
    The union E_n of the 2**n closed intervals left after n removal steps.

    Endpoints are kept exactly: the left endpoints are integers over the
    common denominator ``q**n`` and every interval has length ``xi**n``.
    The 2**n numerators are only built when the stage is enumerated;
    ``interval(i)`` reads a single interval from the bits of i.

    Parameters
    ----------
    ratio : RatioParam
        Ratio of the Cantor construction.
    generation : int
        Number of removal steps n.
    '''

    def __init__(self, ratio, generation):
        self.__ratio = self._is_instance(ratio, RatioParam, 'ratio')
        self.__generation = self._int_number(generation, n_min=0, name='generation')
        self.__denominator = ratio.denominator**self.__generation
        self.__width_numerator = ratio.numerator**self.__generation
        self.__numerators = None #Calculated on first enumeration

    def _numerators(self):
        if self.__numerators is None:
            p, q = self.__ratio.numerator, self.__ratio.denominator
            numerators = [0]
            for k in range(self.__generation):
                shift = p**k * (q - p)
                numerators = [x for a in numerators for x in (a*q, a*q + shift)]
            self.__numerators = tuple(numerators)
        return self.__numerators

    def numerator(self, i):
        '''
        Left endpoint of the i-th interval times ``q**n``, read off the bits
        of i without enumerating the stage. Bit n-1-k of i selects the right
        child at removal step k.
        '''
        n = self.__generation
        i = self._int_number(i, n_min=0, n_max=len(self) - 1, name='i')
        p, q = self.__ratio.numerator, self.__ratio.denominator
        return sum(p**k * (q - p) * q**(n - 1 - k)
                   for k in range(n) if i >> (n - 1 - k) & 1)

    def interval(self, i):
        '''The i-th interval ``(a, b)`` as Fractions.'''
        a = self.numerator(i)
        return (Fraction(a, self.__denominator),
                Fraction(a + self.__width_numerator, self.__denominator))

    #Property getters
    @property
    def ratio(self):
        return self.__ratio
    @property
    def generation(self):
        return self.__generation
    @property
    def denominator(self):
        return self.__denominator
    @property
    def width(self):
        '''Exact length xi**n of every interval.'''
        return Fraction(self.__width_numerator, self.__denominator)
    @property
    def total_length(self):
        return len(self) * self.width

    @property
    def intervals(self):
        '''Ordered list of ``(a, b)`` pairs of Fractions.'''
        d = self.__denominator
        w = self.__width_numerator
        return [(Fraction(a, d), Fraction(a + w, d)) for a in self._numerators()]

    def left_endpoints(self):
        '''Left endpoints as a float array (correctly rounded).'''
        d = self.__denominator
        return np.array([a / d for a in self._numerators()])

    def right_endpoints(self):
        d = self.__denominator
        w = self.__width_numerator
        return np.array([(a + w) / d for a in self._numerators()])

    def endpoints(self):
        '''All 2**(n+1) endpoints in increasing order as floats.'''
        points = np.empty(2 * len(self))
        points[0::2] = self.left_endpoints()
        points[1::2] = self.right_endpoints()
        return points

    def contains(self, other):
        '''True when every interval of ``other`` lies in an interval of self.'''
        if other.ratio != self.ratio or other.generation < self.generation:
            return False
        # the i-th interval of generation m descends from interval i >> (m - n)
        shift = other.generation - self.generation
        mine = self.intervals
        return all(mine[i >> shift][0] <= c and d <= mine[i >> shift][1]
                   for i, (c, d) in enumerate(other.intervals))

    def __len__(self):
        return 2**self.__generation

    def __iter__(self):
        return iter(self.intervals)

    def __repr__(self):
        return f'IntervalSet(xi={self.ratio}, generation={self.generation}, count={len(self)})'
