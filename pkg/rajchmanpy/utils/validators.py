import numbers
from fractions import Fraction

import numpy as np


class RajchmanValidator:

    def _float_number(self, value, n_min=None, n_max=None, name=None):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ValueError(f'{name} must be a real number')
        if not np.isfinite(value):
            raise ValueError(f'{name} must be finite')
        if n_min is not None and value < n_min:
            raise ValueError(f'{name} must be at least {n_min}')
        if n_max is not None and value > n_max:
            raise ValueError(f'{name} cannot exceed {n_max}')
        return value


    def _int_number(self, value, n_min=None, n_max=None, name=None):
        if isinstance(value, bool):
            raise ValueError(f'{name} must be an integer number')
        if isinstance(value, numbers.Integral):
            value = int(value)
        else:
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ValueError(f'{name} must be an integer number')
            if not float.is_integer(value):
                raise ValueError(f'{name} must be an integer number')
            value = int(value)
        if n_min is not None and value < n_min:
            raise ValueError(f'{name} must be at least {n_min}')
        if n_max is not None and value > n_max:
            raise ValueError(f'{name} cannot exceed {n_max}')
        return value


    def _complex_number(self, value, max_modulus=None, strict=False, name=None):
        try:
            value = complex(value)
        except (TypeError, ValueError):
            raise ValueError(f'{name} must be a complex number')
        if not (np.isfinite(value.real) and np.isfinite(value.imag)):
            raise ValueError(f'{name} must be finite')
        if max_modulus is not None:
            if strict and abs(value) >= max_modulus:
                raise ValueError(f'{name} must have modulus below {max_modulus}')
            if not strict and abs(value) > max_modulus:
                raise ValueError(f'{name} cannot have modulus above {max_modulus}')
        return value


    def _ratio(self, value, name='xi'):
        '''Exact rational in the open interval (0, 1/2).'''
        if isinstance(value, (float, np.floating)):
            raise ValueError(f'{name} must be an exact rational p/q, not the float {value!r}')
        try:
            value = Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError(f'{name} must be an exact rational p/q')
        if not 0 < value < Fraction(1, 2):
            raise ValueError(f'ratio must satisfy 0 < {name} < 1/2')
        return value


    def _probability_weights(self, weights, tol=1e-12, name='weights'):
        weights = np.asarray(weights, dtype=float)
        if weights.ndim != 1 or weights.size == 0:
            raise ValueError(f'{name} must be a nonempty one dimensional sequence')
        if np.any(weights < 0):
            raise ValueError(f'{name} must be nonnegative')
        if abs(weights.sum() - 1.0) > tol:
            raise ValueError(f'{name} must sum to 1 (got {weights.sum()!r})')
        return weights


    def _is_instance(self, value, typeobj, name=None):
        if not isinstance(value, typeobj):
            raise ValueError(f'{name} must be an instance of {typeobj}')
        return value


# module level instance for the functional parts of the package
validate = RajchmanValidator()
