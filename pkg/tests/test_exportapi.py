'''
Test of tables and JSON documents
=================================

CSV tables written through pandas and the deterministic JSON writer.
'''

import io
import json

import numpy as np
import pandas as pd
import pytest

from rajchmanpy import CoefficientSeries, DiskAtomSet
from rajchmanpy.circlemeasure import coefficient_table
from rajchmanpy.exportapi import (table_to_frame, compare_tables, atoms_to_frame,
                                  series_to_frame, write_table, build_json, write_json,
                                  series_to_dict, SCHEMA_VERSION)


@pytest.fixture(scope='module')
def product_table():
    return coefficient_table('1/3', range(0, 33))


@pytest.fixture(scope='module')
def oracle_table():
    return coefficient_table('1/3', range(0, 33), method='oracle', stage=12)


def test_table_columns(product_table):
    frame = table_to_frame(product_table)
    assert list(frame.columns) == ['n', 're', 'im', 'abs', 'method', 'tail_bound']
    assert len(frame) == 33
    assert frame['abs'].iloc[0] == pytest.approx(1.0)
    assert (frame['method'] == 'product').all()


def test_compare_tables_agree(product_table, oracle_table):
    frame = compare_tables(product_table, oracle_table)
    assert frame['agree'].all()
    assert (frame['method'] == 'both').all()
    assert (frame['difference'] <= frame['tail_bound'] + frame['oracle_bound']).all()


def test_compare_tables_index_mismatch(product_table):
    other = coefficient_table('1/3', range(1, 34))
    with pytest.raises(ValueError):
        compare_tables(product_table, other)


def test_csv_precision(product_table):
    buffer = io.StringIO()
    write_table(table_to_frame(product_table), buffer)
    text = buffer.getvalue()
    assert '\r' not in text
    assert text.splitlines()[0] == 'n,re,im,abs,method,tail_bound'
    frame = pd.read_csv(io.StringIO(text), float_precision='round_trip')
    np.testing.assert_array_equal(frame['re'].to_numpy(), product_table.values.real)


def test_atoms_frame():
    frame = atoms_to_frame(DiskAtomSet([0.5, -0.5j], [0.25, 0.75]))
    assert list(frame['k']) == [1, 2]
    np.testing.assert_array_equal(frame['weight'], [0.25, 0.75])


def test_json_sorted_and_versioned():
    text = build_json({'b': 1, 'a': [0.1, 2.0], 'c': {'z': True, 'y': None}})
    document = json.loads(text)
    assert document['schema_version'] == SCHEMA_VERSION
    assert list(document) == sorted(document)
    assert '2.0' in text
    assert document['a'][0] == 0.1
    assert document['c'] == {'y': None, 'z': True}


def test_json_complex_and_series():
    series = CoefficientSeries([1, 0.5j])
    document = json.loads(build_json({'value': 1 + 2j, 'series': series_to_dict(series)}))
    assert document['value'] == [1.0, 2.0]
    assert document['series']['coefficients'] == [[1.0, 0.0], [0.0, 0.5]]
    assert document['series']['degree'] == 1
    assert document['series']['l1_norm'] == 1.5


def test_series_frame():
    frame = series_to_frame(CoefficientSeries([1, 0.5j, -0.25]))
    assert list(frame.columns) == ['j', 're', 'im']
    assert list(frame['j']) == [0, 1, 2]
    np.testing.assert_array_equal(frame['re'], [1, 0, -0.25])
    np.testing.assert_array_equal(frame['im'], [0, 0.5, 0])


def test_json_non_finite():
    document = json.loads(build_json({'bound': np.inf}))
    assert document['bound'] == float('inf')


def test_json_rejects_unknown():
    with pytest.raises(TypeError):
        build_json({'x': object()})


def test_write_json_file(tmp_path):
    target = tmp_path / 'report.json'
    write_json({'n': 3}, target)
    write_json({'n': 3}, tmp_path / 'again.json')
    assert target.read_bytes() == (tmp_path / 'again.json').read_bytes()
    assert json.loads(target.read_text())['n'] == 3
