'''
Test of the peak candidate pipeline
===================================

Default instance xi = 2/13, alpha = 0.6, K = 10 generations, degree 2**12:
2/13 < (1/2)**2.5, 13/2 is not an integer and alpha > 1/2. The candidate G
is paired with the moments of the Cantor measure; the pairing should nearly
attain the sup norm of G.

References
----------
1 - Bernstein, S. Sur la convergence absolue des series trigonometriques. C. R. Acad. Sci. Paris 158, 1914.
2 - Salem, R. Algebraic Numbers and Fourier Analysis. D. C. Heath, 1963.
'''

import json

import numpy as np
import pytest

from rajchmanpy import CantorSpec, PeakParams
from rajchmanpy.circlemeasure import cantor_stage
from rajchmanpy.peaks import (build_peak_candidate, vanish_at_origin, herglotz_weight_moments,
                              total_mass)
from rajchmanpy.support import moment_vector, verify_support_pair, pairing_crosscheck
from rajchmanpy.cli import main, EXIT_OK


@pytest.fixture(scope='module')
def params():
    return PeakParams(0.6, '2/13', generations=10, degree=2**12)


@pytest.fixture(scope='module')
def candidate(params):
    return build_peak_candidate(params)


@pytest.fixture(scope='module')
def cantor_moments(params):
    return moment_vector(CantorSpec(params.xi), params.degree)


@pytest.fixture(scope='module')
def endpoints(params):
    return cantor_stage(params.xi, params.generations).endpoints()


def test_candidate_within_caps(candidate):
    d = candidate.diagnostics
    assert d['caps_failed'] == []
    assert d['sup_lower'] <= 1 + 1e-6
    assert d['peak_deficiency'] <= 0.05
    assert d['origin_modulus'] < 1
    assert d['min_real_part'] >= -1e-9
    assert d['probe_count'] == 2**11


def test_attainment_ratio(candidate, cantor_moments, endpoints):
    report = verify_support_pair(candidate.series, cantor_moments, support_points=endpoints)
    assert report.ratio >= 0.8
    assert report.supported
    assert report.sup_lower <= report.sup_upper


def test_lower_bound_monotone_in_truncation(candidate, cantor_moments):
    previous = None
    for D in (256, 512, 1024, 2048, 4096):
        report = verify_support_pair(candidate.series.truncate(D), cantor_moments, grid=2**14)
        d = report.diagnostics
        if previous is not None:
            assert d['pairing_lower_bound'] >= (previous['pairing_lower_bound']
                                                - previous['truncation_residual'] - 1e-12)
        previous = d


def test_pairing_crosscheck(candidate, params):
    check = pairing_crosscheck(candidate.series, params.xi, 12)
    assert check.difference <= check.bound


def test_vanish_at_origin_ratio(candidate, cantor_moments, endpoints):
    normalized = vanish_at_origin(candidate)
    assert normalized.series[0] == 0
    assert normalized.diagnostics['caps_failed'] == []
    before = verify_support_pair(candidate.series, cantor_moments, support_points=endpoints)
    after = verify_support_pair(normalized.series, cantor_moments, support_points=endpoints)
    assert after.diagnostics['constant_coefficient'] == [0.0, 0.0]
    assert abs(after.ratio - before.ratio) <= 0.02


@pytest.mark.parametrize('K', range(1, 11))
def test_mass_identity_default_instance(K):
    # the integrand of c_0 is constant after the substitution, so a low degree suffices
    weight = herglotz_weight_moments(PeakParams(0.6, '2/13', generations=K, degree=8))
    W = total_mass('2/13', 0.6)
    assert abs(weight.mass - W * (1 - (2 * (2 / 13)**0.4)**K)) <= 1e-6 * W


def test_cli_verify_vanish_origin(capsys):
    code = main(['verify', '--xi', '2/13', '--alpha', '0.6', '--degree', '4096', '--gen', '10',
                 '--vanish-origin'])
    document = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert document['schema_version'] == '1'
    assert document['report']['verdict'] in ('supported', 'not_supported')
    assert document['report']['diagnostics']['constant_coefficient'] == [0.0, 0.0]
    assert document['candidate']['diagnostics']['vanish_at_origin']
    assert np.isfinite(document['report']['ratio'])
