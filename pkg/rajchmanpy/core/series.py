import numbers

import numpy as np

from rajchmanpy.utils import RajchmanValidator


__all__ = ['CoefficientSeries']


class CoefficientSeries(RajchmanValidator):
    '''
    Truncated Taylor series a_0 + a_1 z + ... + a_D z**D of an element of the
    Wiener algebra W+. The same object is used for functionals b in l1.

    Parameters
    ----------
    coefficients : array_like of complex
        Coefficients a_0, ..., a_D. Trailing zeros are kept.
    residual : float, default 0
        l1 norm of the tail dropped by the truncation that produced the
        series, when it is known. ``numpy.inf`` when it is not.

    Examples
    --------
    >>> from rajchmanpy import CoefficientSeries
    >>> a = CoefficientSeries([0.5, 0.5])
    >>> a.degree, a.l1_norm
    (1, 1.0)
    '''

    def __init__(self, coefficients, residual=0.0):
        coefficients = np.array(coefficients, dtype=complex).ravel()
        if coefficients.size == 0:
            raise ValueError('coefficients must contain at least a_0')
        if not np.all(np.isfinite(coefficients)):
            raise ValueError('coefficients must be finite')
        coefficients.setflags(write=False)
        self.__coefficients = coefficients
        self.__residual = self._float_number(residual, n_min=0, name='residual') \
            if np.isfinite(residual) else float(residual)
        self.__l1_norm = None #Calculated property
        self.__derivative_weight = None #Calculated property

    @classmethod
    def unit(cls, degree=0):
        '''The constant series 1 padded to ``degree``.'''
        coefficients = np.zeros(degree + 1, dtype=complex)
        coefficients[0] = 1.0
        return cls(coefficients)

    @classmethod
    def monomial(cls, j, value=1.0):
        coefficients = np.zeros(j + 1, dtype=complex)
        coefficients[j] = value
        return cls(coefficients)

    #Property getters
    @property
    def coefficients(self):
        return self.__coefficients
    @property
    def degree(self):
        return self.__coefficients.size - 1
    @property
    def residual(self):
        return self.__residual

    @property
    def l1_norm(self):
        '''Wiener norm sum |a_j| of the stored coefficients.'''
        if self.__l1_norm is None:
            self.__l1_norm = float(np.abs(self.__coefficients).sum())
        return self.__l1_norm

    @property
    def derivative_weight(self):
        '''sum j |a_j|, a bound of |f'| on the closed disk.'''
        if self.__derivative_weight is None:
            j = np.arange(self.degree + 1)
            self.__derivative_weight = float((j * np.abs(self.__coefficients)).sum())
        return self.__derivative_weight

    @property
    def is_trivial(self):
        '''True for constant series, the trivial functionals (alpha, 0, 0, ...).'''
        return not np.any(self.__coefficients[1:])

    def truncate(self, degree):
        '''Degree ``degree`` truncation, zero padded when the series is shorter.'''
        degree = self._int_number(degree, n_min=0, name='degree')
        coefficients = np.zeros(degree + 1, dtype=complex)
        keep = min(degree, self.degree) + 1
        coefficients[:keep] = self.__coefficients[:keep]
        dropped = float(np.abs(self.__coefficients[keep:]).sum())
        return CoefficientSeries(coefficients, residual=self.__residual + dropped)

    def quotient(self):
        '''The series with a_0 := 0, i.e. the functional on the quotient by constants.'''
        coefficients = self.__coefficients.copy()
        coefficients[0] = 0.0
        return CoefficientSeries(coefficients, residual=self.__residual)

    def _aligned(self, other):
        degree = max(self.degree, other.degree)
        return self.truncate(degree).coefficients, other.truncate(degree).coefficients

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            coefficients = self.__coefficients.copy()
            coefficients[0] += other
            return CoefficientSeries(coefficients, residual=self.__residual)
        if isinstance(other, CoefficientSeries):
            a, b = self._aligned(other)
            return CoefficientSeries(a + b, residual=self.__residual + other.residual)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CoefficientSeries(-self.__coefficients, residual=self.__residual)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return CoefficientSeries(self.__coefficients * other,
                                     residual=self.__residual * abs(other))
        if isinstance(other, CoefficientSeries):
            # truncated Cauchy product, degree of the longer factor
            degree = max(self.degree, other.degree)
            product = np.convolve(self.__coefficients, other.coefficients)[:degree + 1]
            return CoefficientSeries(product).truncate(degree)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            if other == 0:
                raise ZeroDivisionError('division of a series by zero')
            return self * (1 / other)
        return NotImplemented

    def __len__(self):
        return self.__coefficients.size

    def __getitem__(self, j):
        return self.__coefficients[j]

    def __repr__(self):
        head = ', '.join(f'{c:.6g}' for c in self.__coefficients[:4])
        tail = ', ...' if self.degree >= 4 else ''
        return f'CoefficientSeries(degree={self.degree}, [{head}{tail}], l1={self.l1_norm:.6g})'

    def __eq__(self, other):
        if isinstance(other, CoefficientSeries):
            return np.array_equal(self.coefficients, other.coefficients)
        return NotImplemented

    __hash__ = None
