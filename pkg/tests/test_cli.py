'''
Test of the command line front end
==================================

Every subcommand is driven through ``main(argv)``; output goes to stdout or
to ``--out`` and the exit code is returned.
'''

import io
import json

import numpy as np
import pandas as pd
import pytest

from rajchmanpy import Settings
from rajchmanpy.cli import main, EXIT_OK, EXIT_INVALID, EXIT_CAPS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_csv(capsys):
    code, out, err = run(capsys, 'coeffs', '--xi', '1/3', '--max-n', '1024')
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert len(frame) == 1025
    assert frame['abs'].iloc[0] == pytest.approx(1.0, abs=1e-12)
    assert (frame['abs'] <= 1 + 1e-9).all()
    assert frame['abs'].iloc[3] == pytest.approx(frame['abs'].iloc[1], abs=1e-10)


def test_coeffs_both_agree(capsys):
    code, out, _ = run(capsys, 'coeffs', '--xi', '2/5', '--max-n', '64', '--method', 'both')
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert 'agree' in frame.columns
    assert frame['agree'].all()


def test_coeffs_json(capsys):
    code, out, _ = run(capsys, 'coeffs', '--xi', '1/4', '--max-n', '8', '--format', 'json')
    assert code == EXIT_OK
    document = json.loads(out)
    assert document['xi'] == '1/4'
    assert document['rows']['n'] == list(range(9))


def test_coeffs_deterministic(capsys, tmp_path):
    first, second = tmp_path / 'first.csv', tmp_path / 'second.csv'
    for target in (first, second):
        assert main(['coeffs', '--xi', '2/7', '--max-n', '200', '--threads', '3',
                     '--out', str(target)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    single = tmp_path / 'single.csv'
    main(['coeffs', '--xi', '2/7', '--max-n', '200', '--out', str(single)])
    assert single.read_bytes() == first.read_bytes()


@pytest.mark.parametrize('argv', [
    ['coeffs', '--xi', '3/5'],
    ['coeffs', '--xi', '0.3'],
    ['coeffs', '--xi', '1/3', '--max-n', 'many'],
    ['coeffs', '--xi', '1/3', '--method', 'fast'],
    ['coeffs', '--xi', '1/0'],
    ['classify', '--poly', '1,x,1'],
    ['peak', '--alpha', '0.5'],
    ['peak', '--xi', '1/5', '--alpha', '0.6'],
    ['peak', '--gen', '21'],
    ['coeffs', '--xi', '1/3', '--threads', '0'],
    ['coeffs'],
])
def test_invalid_input(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_INVALID
    assert out == ''
    assert len(err.strip().splitlines()) == 1
    assert err.startswith('rajchmanpy: error:')


def test_classify_integer_reciprocal(capsys):
    code, out, _ = run(capsys, 'classify', '--xi', '1/3')
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['verdict'] == 'NotRajchman_IntegerReciprocal'


def test_classify_rational(capsys):
    _, out, _ = run(capsys, 'classify', '--xi', '2/5')
    assert json.loads(out)['verdict'] == 'Rajchman_RationalNonIntegerReciprocal'


def test_classify_golden_polynomial(capsys):
    code, out, _ = run(capsys, 'classify', '--poly', '1,-1,-1')
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['pisot'] == 'Pisot'
    assert document['dominant_root'] == pytest.approx((1 + 5**0.5) / 2)
    assert 'verdict' not in document


def test_classify_polynomial_ratio(capsys):
    _, out, _ = run(capsys, 'classify', '--poly', '1,-3,1')
    document = json.loads(out)
    assert document['verdict'] == 'NotRajchman_PisotReciprocal'


def test_classify_needs_source(capsys):
    code, _, _ = run(capsys, 'classify')
    assert code == EXIT_INVALID


def test_duality_small(capsys):
    code, out, err = run(capsys, 'duality', '--trials', '10', '--combinations', '40',
                         '--max-degree', '16', '--seed', '3')
    assert code == EXIT_OK
    assert 'violations: 0' in err
    document = json.loads(out)
    assert document['violations'] == 0
    assert len(document['rows']['trial']) == 10


def test_duality_deterministic(capsys):
    argv = ['duality', '--trials', '5', '--combinations', '10', '--seed', '11', '--format', 'csv']
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_discretize_lebesgue(capsys):
    code, out, _ = run(capsys, 'discretize', '--lebesgue', '-n', '16')
    frame = pd.read_csv(io.StringIO(out))
    assert code == EXIT_OK
    assert len(frame) == 16
    np.testing.assert_allclose(frame['weight'], 1 / 16)
    radius = np.hypot(frame['re'], frame['im'])
    np.testing.assert_allclose(radius, np.cos(np.pi / 16))


def test_discretize_cantor(capsys):
    code, out, _ = run(capsys, 'discretize', '--xi', '1/3', '--stage', '8', '-n', '32')
    frame = pd.read_csv(io.StringIO(out))
    assert code == EXIT_OK
    assert frame['weight'].sum() == pytest.approx(1.0)
    assert (frame['weight'] >= 0).all()


# caps wide open, so the peak commands always complete
OPEN_CAPS = Settings(deficiency_cap=float('inf'), sup_slack=float('inf'),
                     real_part_slack=float('inf'))


@pytest.fixture
def open_caps(monkeypatch):
    monkeypatch.setattr('rajchmanpy.cli._settings',
                        lambda args: OPEN_CAPS.replace(threads=args.threads or 1))


def test_peak_small(capsys, tmp_path, open_caps):
    target = tmp_path / 'moments.csv'
    code, _, _ = run(capsys, 'peak', '--degree', '128', '--gen', '3', '--grid', '4096',
                     '--format', 'csv', '--out', str(target))
    assert code == EXIT_OK
    frame = pd.read_csv(target)
    assert list(frame.columns) == ['k', 're', 'im']
    assert len(frame) == 129
    assert frame['re'].iloc[0] > 0
    assert frame['im'].iloc[0] == 0


def test_peak_series_csv(capsys, open_caps):
    code, out, _ = run(capsys, 'peak', '--degree', '64', '--gen', '2', '--grid', '1024',
                       '--format', 'csv', '--series')
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == ['j', 're', 'im']
    assert list(frame['j']) == list(range(65))
    # G(0) = c_0/(1 + c_0) with c_0 > 0
    assert 0 < frame['re'].iloc[0] < 1
    assert frame['im'].iloc[0] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize('command', ['peak', 'verify'])
def test_peak_json_deterministic(capsys, tmp_path, open_caps, command):
    argv = [command, '--degree', '64', '--gen', '2', '--grid', '1024']
    first, second, single = (tmp_path / name for name in ('first', 'second', 'single'))
    assert main(argv + ['--threads', '2', '--out', str(first)]) == EXIT_OK
    assert main(argv + ['--threads', '2', '--out', str(second)]) == EXIT_OK
    assert main(argv + ['--out', str(single)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert single.read_bytes() == first.read_bytes()
    assert json.loads(first.read_text())['command'] == command


def test_threads_env_rejected(capsys, monkeypatch):
    monkeypatch.setenv('RAJCHMANPY_THREADS', '0')
    code, out, err = run(capsys, 'coeffs', '--xi', '1/3', '--max-n', '8')
    assert code == EXIT_INVALID
    assert out == ''
    assert 'RAJCHMANPY_THREADS' in err
    code, _, _ = run(capsys, 'coeffs', '--xi', '1/3', '--max-n', '8', '--threads', '2')
    assert code == EXIT_OK


def test_peak_cap_exit(capsys, monkeypatch):
    monkeypatch.setattr('rajchmanpy.cli._settings', lambda args: Settings(deficiency_cap=1e-12))
    code, out, err = run(capsys, 'peak', '--degree', '64', '--gen', '2', '--grid', '1024')
    assert code == EXIT_CAPS
    document = json.loads(out)
    assert document['status'] == 'aborted'
    assert 'peak_deficiency' in document['candidate']['diagnostics']['caps_failed']
    assert 'diagnostic caps exceeded' in err


@pytest.mark.parametrize('value', ['0', '-2', 'four'])
def test_settings_env_threads_invalid(value):
    with pytest.raises(ValueError, match='RAJCHMANPY_THREADS'):
        Settings.from_env({'RAJCHMANPY_THREADS': value})
    assert Settings.from_env({'RAJCHMANPY_THREADS': value}, threads=3).threads == 3
    assert Settings.from_env({'RAJCHMANPY_THREADS': '4'}).threads == 4
