'''
Test of the Rajchman classification
===================================

Salem-Bari criterion: the Cantor measure of ratio xi is a Rajchman measure
unless 1/xi is a Pisot number; for rational ratios, unless 1/xi is an integer.

References
----------
1 - Salem, R. Algebraic Numbers and Fourier Analysis. D. C. Heath, 1963.
'''

import warnings

import pytest

from rajchmanpy import RatioParam
from rajchmanpy.circlemeasure import (pisot_check, rajchman_classify, parse_polynomial,
                                      PisotStatus, Verdict)


def test_golden_ratio_is_pisot():
    result = pisot_check([1, -1, -1])
    assert result.status is PisotStatus.PISOT
    assert abs(result.dominant_root - (1 + 5**0.5) / 2) < 1e-12
    assert result.irreducible


@pytest.mark.parametrize('k', [2, 3, 4, 5, 6])
def test_integers_are_pisot(k):
    assert pisot_check([1, -k]).status is PisotStatus.PISOT


def test_sqrt_two_not_pisot():
    assert pisot_check([1, 0, -2]).status is PisotStatus.NOT_PISOT


def test_salem_polynomial_inconclusive_or_not_pisot():
    # Lehmer's polynomial, a Salem number: conjugates on the unit circle
    lehmer = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        result = pisot_check(lehmer)
    assert result.status is not PisotStatus.PISOT


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        pisot_check([2, -1, -1])


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        pisot_check([0, 0])


def test_reducible_warns():
    with pytest.warns(UserWarning):
        pisot_check([1, -3, 2])  # (x - 1)(x - 2)


def test_parse_polynomial():
    assert parse_polynomial('1,-1,-1') == [1, -1, -1]
    with pytest.raises(ValueError):
        parse_polynomial('1,x,2')


def test_integer_reciprocal():
    assert rajchman_classify('1/3').verdict is Verdict.NOT_RAJCHMAN_INTEGER_RECIPROCAL
    assert rajchman_classify('1/7').verdict.is_rajchman is False


@pytest.mark.parametrize('xi', ['2/5', '2/13', '3/7'])
def test_rational_non_integer_reciprocal(xi):
    verdict = rajchman_classify(xi)
    assert verdict.verdict is Verdict.RAJCHMAN_RATIONAL_NON_INTEGER_RECIPROCAL
    assert verdict.verdict.is_rajchman


def test_pisot_reciprocal():
    xi = RatioParam.from_polynomial([1, -3, 1])
    verdict = rajchman_classify(xi)
    assert verdict.verdict is Verdict.NOT_RAJCHMAN_PISOT_RECIPROCAL
    assert verdict.evidence['pisot'] == 'Pisot'


def test_not_pisot_reciprocal():
    # x**2 - 5 has conjugate -sqrt(5) outside the disk
    xi = RatioParam.from_polynomial([1, 0, -5])
    assert rajchman_classify(xi).verdict is Verdict.RAJCHMAN_NOT_PISOT_RECIPROCAL
