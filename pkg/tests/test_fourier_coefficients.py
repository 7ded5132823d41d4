'''
Test of the Fourier-Stieltjes coefficients of Cantor measures
=============================================================

The infinite product formula is compared with the closed form integration
over the stage sets, and with the classical values for the middle third
Cantor measure.

References
----------
1 - Zygmund, A. Trigonometric Series, Vol. I. Cambridge University Press, 1959.
2 - Salem, R. Algebraic Numbers and Fourier Analysis. D. C. Heath, 1963.
'''

import pytest
import numpy as np

from rajchmanpy import RatioParam
from rajchmanpy.circlemeasure import (fs_coeff_product, fs_coeff_oracle, choose_oracle_stage,
                                      coefficient_table, decay_profile, product_truncation)


def test_zero_index():
    assert fs_coeff_product('1/3', 0).value == 1
    assert fs_coeff_oracle('1/3', 5, 0) == 1


def test_first_coefficient_third():
    # -cos(2 pi/3) cos(2 pi/9) cos(2 pi/27) ...
    expected = -np.prod(np.cos(2 * np.pi / 3**np.arange(1, 40)))
    np.testing.assert_almost_equal(fs_coeff_product('1/3', 1).value.real, expected, decimal=12)


@pytest.mark.parametrize('n', [1, 2, 5, 17, 100])
def test_real_and_symmetric(n):
    plus = fs_coeff_product('2/5', n).value
    minus = fs_coeff_product('2/5', -n).value
    assert plus.imag == 0
    np.testing.assert_almost_equal(plus, np.conj(minus))


def test_tail_bound_below_tolerance():
    value = fs_coeff_product('1/4', 1000, tol=1e-10)
    assert value.tail_bound < 1e-10
    K, tail = product_truncation(RatioParam('1/4'), 1000, 1e-10)
    assert K == value.terms and tail == value.tail_bound


def test_exact_angle_reduction():
    # 3**30 pi * 2/3 is an even multiple of pi for the first 30 factors
    big = fs_coeff_product('1/3', 3**30).value
    small = fs_coeff_product('1/3', 1).value
    np.testing.assert_almost_equal(big, small, decimal=9)


def test_choose_oracle_stage():
    m = choose_oracle_stage('1/3', 256, 2e-3)
    assert 2 * np.pi * 256 * 3.0**-m < 2e-3
    assert 2 * np.pi * 256 * 3.0**-(m - 1) >= 2e-3


def test_oracle_stage_limit():
    with pytest.raises(ValueError):
        choose_oracle_stage('2/5', 10**6, 1e-9, max_stage=22)


@pytest.mark.parametrize('xi', ['1/3', '1/4', '2/5'])
def test_product_against_oracle(xi):
    n = np.arange(257)
    m = choose_oracle_stage(xi, 256, 2e-3)
    oracle = fs_coeff_oracle(xi, m, n)
    product = coefficient_table(xi, n, 'product')
    bound = product.tail_bound + 2 * np.pi * n * float(RatioParam(xi))**m
    assert np.all(np.abs(product.values - oracle) <= bound + 1e-12)


def test_oracle_table_default_stage():
    table = coefficient_table('1/3', range(0, 65), 'oracle')
    assert np.all(table.tail_bound < 2e-3)
    assert table.method == 'oracle'


def test_oracle_blocks_bounded(monkeypatch):
    # stage 10 has 1024 intervals, so 2048 entries give blocks of two indices
    full = coefficient_table('2/5', range(0, 129), 'oracle', stage=10)
    monkeypatch.setattr('rajchmanpy.circlemeasure._coefficients._BLOCK_ENTRIES', 2048)
    blocked = coefficient_table('2/5', range(0, 129), 'oracle', stage=10)
    np.testing.assert_allclose(blocked.values, full.values, rtol=0, atol=1e-13)


def test_table_threads_match():
    single = coefficient_table('2/5', range(-50, 51), threads=1)
    several = coefficient_table('2/5', range(-50, 51), threads=4)
    np.testing.assert_array_equal(single.values, several.values)


def test_table_lookup():
    table = coefficient_table('1/3', range(-3, 4))
    assert 2 in table and 9 not in table
    np.testing.assert_almost_equal(table[-2], np.conj(table[2]))
    assert len(table) == 7


def test_table_invalid_method():
    with pytest.raises(ValueError):
        coefficient_table('1/3', range(4), 'spline')


def test_integer_reciprocal_no_decay():
    values = [abs(fs_coeff_product('1/3', 3**k).value) for k in range(9)]
    tails = [fs_coeff_product('1/3', 3**k).tail_bound for k in range(9)]
    for i in range(9):
        for j in range(9):
            assert abs(values[i] - values[j]) <= tails[i] + tails[j] + 1e-15
    assert values[0] > 0.1


def test_decay_profile_blocks():
    table = coefficient_table('1/3', range(0, 64))
    blocks = decay_profile(table)
    assert [b.block for b in blocks] == [0, 1, 2, 3, 4, 5]
    assert blocks[2].start == 4 and blocks[2].stop == 8


def test_decay_profile_incomplete():
    table = coefficient_table('1/3', range(0, 10))
    with pytest.raises(ValueError):
        decay_profile(table, 0, 4)
