'''
Test of the Wiener algebra toolkit
==================================

Truncated series arithmetic, evaluation, the boundary sup norm bracket,
composition, reciprocals and disk automorphisms.
'''

import pytest
import numpy as np

from rajchmanpy import CoefficientSeries
from rajchmanpy.wiener import (evaluate, wiener_norm, sup_norm_estimate, boundary_values, pairing,
                               AnalyticGerm, compose_power_series, reciprocal_one_plus,
                               mobius_postcompose, fejer_means)


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def half_disk():
    return CoefficientSeries([0.5, 0.5])


def test_series_arithmetic(half_disk):
    total = half_disk + CoefficientSeries([0, 0, 1])
    np.testing.assert_array_equal(total.coefficients, [0.5, 0.5, 1])
    np.testing.assert_array_equal((half_disk * 2).coefficients, [1, 1])
    np.testing.assert_array_equal((1 - half_disk).coefficients, [0.5, -0.5])
    square = half_disk * half_disk
    np.testing.assert_array_equal(square.coefficients, [0.25, 0.5])


def test_truncate_residual():
    a = CoefficientSeries([1, -2, 3, -4])
    t = a.truncate(1)
    assert t.degree == 1
    assert t.residual == 7.0
    assert a.truncate(6).degree == 6


def test_series_properties():
    a = CoefficientSeries([1, 0, -2j])
    assert a.l1_norm == 3.0
    assert a.derivative_weight == 4.0
    assert not a.is_trivial
    assert CoefficientSeries([3, 0]).is_trivial
    assert a.quotient()[0] == 0


def test_series_immutable():
    a = CoefficientSeries([1, 2])
    with pytest.raises(ValueError):
        a.coefficients[0] = 5


def test_evaluate(half_disk):
    assert evaluate(half_disk, 1) == 1
    np.testing.assert_almost_equal(evaluate(half_disk, [0, -1, 1j]), [0.5, 0, 0.5 + 0.5j])
    with pytest.raises(ValueError):
        evaluate(half_disk, 1.5)


def test_wiener_norm(half_disk):
    assert wiener_norm(half_disk) == 1.0


def test_boundary_values_folding(rng):
    coefficients = rng.standard_normal(40) + 1j * rng.standard_normal(40)
    a = CoefficientSeries(coefficients)
    M = 16
    points = np.exp(2j * np.pi * np.arange(M) / M)
    np.testing.assert_almost_equal(boundary_values(a, M), evaluate(a, points))


def test_sup_bracket_contains_true_sup(rng):
    for _ in range(20):
        a = CoefficientSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
        fine = np.abs(boundary_values(a, 2**16)).max()
        bracket = sup_norm_estimate(a, 64)
        assert bracket.lower <= fine + 1e-12
        assert fine <= bracket.upper + 1e-12
        assert fine <= bracket.tight_upper + 1e-12
        assert bracket.tight_upper <= bracket.upper


def test_sup_bracket_monomial():
    bracket = sup_norm_estimate(CoefficientSeries.monomial(3, 2.0), 32)
    assert bracket.lower == pytest.approx(2.0)
    assert abs(abs(bracket.argmax) - 1) < 1e-12


def test_pairing(half_disk):
    assert pairing(half_disk, [1, 1]) == 1
    with pytest.raises(ValueError):
        pairing(half_disk, [1])
    assert pairing(half_disk, [1], pad=True) == 0.5


def test_compose_power(half_disk):
    composed = compose_power_series(AnalyticGerm.power(2), half_disk)
    np.testing.assert_almost_equal(composed.coefficients, [0.25, 0.5])
    wider = compose_power_series([0, 0, 1], half_disk, degree=2)
    np.testing.assert_almost_equal(wider.coefficients, [0.25, 0.5, 0.25])


def test_compose_radius_violation():
    with pytest.raises(ValueError, match='radius'):
        compose_power_series(AnalyticGerm.geometric(8), CoefficientSeries([1.5, 0.1]))


def test_compose_truncated_germ_warns():
    with pytest.warns(UserWarning):
        result = compose_power_series(AnalyticGerm.geometric(8), CoefficientSeries([0.5, 0.1]))
    assert np.isinf(result.residual)


def test_compose_geometric_at_origin():
    g = CoefficientSeries([0, 0.5])
    result = compose_power_series(AnalyticGerm.geometric(6), g)
    np.testing.assert_almost_equal(result.coefficients, [1, -0.5])


def test_reciprocal_one_plus(rng):
    F = CoefficientSeries(np.concatenate([[2.0], 0.3 * rng.standard_normal(30)]))
    R = reciprocal_one_plus(F)
    product = (F + 1.0) * R
    np.testing.assert_almost_equal(product.coefficients, np.eye(1, 31, 0)[0])


def test_reciprocal_geometric():
    R = reciprocal_one_plus(CoefficientSeries([0, 1]), degree=5)
    np.testing.assert_almost_equal(R.coefficients, [1, -1, 1, -1, 1, -1])


def test_reciprocal_singular():
    with pytest.raises(ZeroDivisionError):
        reciprocal_one_plus(CoefficientSeries([-1, 1]))


def test_mobius_half_disk(half_disk):
    G = mobius_postcompose(half_disk, degree=40)
    assert G[0] == 0
    np.testing.assert_almost_equal(evaluate(G, 1.0), 1.0, decimal=10)


def test_mobius_maps_into_disk(rng):
    g = CoefficientSeries([0.3 + 0.2j, 0.2, -0.1j])
    G = mobius_postcompose(g, degree=200)
    assert G[0] == 0
    assert sup_norm_estimate(G, 4096).lower <= 1 + 1e-9


def test_mobius_rejects():
    with pytest.raises(ValueError):
        mobius_postcompose(CoefficientSeries([0, 1]))
    with pytest.raises(ValueError):
        mobius_postcompose(CoefficientSeries([1, 0]))


def test_fejer_means_contracts(rng):
    a = CoefficientSeries(rng.standard_normal(17))
    summed = fejer_means(a)
    assert summed[0] == a[0]
    assert summed.coefficients[-1] == pytest.approx(a.coefficients[-1] / 17)
    assert (np.abs(boundary_values(summed, 4096)).max()
            <= sup_norm_estimate(a, 4096).tight_upper + 1e-12)
