import sys

import numpy as np
import pandas as pd


__all__ = ['table_to_frame', 'compare_tables', 'moments_to_frame', 'series_to_frame',
           'atoms_to_frame', 'write_table']

FLOAT_FORMAT = '%.17g'


def table_to_frame(table):
    '''
    Parameters
    ----------
    table : FourierCoefficientTable

    Returns
    -------
    frame : pd.DataFrame
        Columns n, re, im, abs, method, tail_bound; one row per index.
    '''
    values = table.values
    return pd.DataFrame({
        'n': table.indices,
        're': values.real,
        'im': values.imag,
        'abs': np.abs(values),
        'method': table.method,
        'tail_bound': table.tail_bound,
    })


def compare_tables(product, oracle):
    '''
    Product table rows with the oracle values beside them. ``agree`` is True
    when the difference is within the sum of both error bounds.

    Returns
    -------
    frame : pd.DataFrame
        Columns n, re, im, abs, method, tail_bound, oracle_re, oracle_im,
        oracle_bound, difference, agree.
    '''
    if not np.array_equal(product.indices, oracle.indices):
        raise ValueError('tables must cover the same indices')
    frame = table_to_frame(product)
    frame['method'] = 'both'
    difference = np.abs(product.values - oracle.values)
    frame['oracle_re'] = oracle.values.real
    frame['oracle_im'] = oracle.values.imag
    frame['oracle_bound'] = oracle.tail_bound
    frame['difference'] = difference
    frame['agree'] = difference <= product.tail_bound + oracle.tail_bound
    return frame


def moments_to_frame(weight):
    '''Columns k, re, im of the weight moments c_k, k = 0..D.'''
    k = np.arange(len(weight))
    return pd.DataFrame({'k': k, 're': weight.moments.real, 'im': weight.moments.imag})


def series_to_frame(series):
    '''Columns j, re, im of the coefficients of a CoefficientSeries, j = 0..degree.'''
    coefficients = series.coefficients
    return pd.DataFrame({
        'j': np.arange(coefficients.size),
        're': coefficients.real,
        'im': coefficients.imag,
    })


def atoms_to_frame(atoms):
    '''Columns k, re, im, weight of a DiskAtomSet, k = 1..n.'''
    points = atoms.atoms
    return pd.DataFrame({
        'k': np.arange(1, points.size + 1),
        're': points.real,
        'im': points.imag,
        'weight': atoms.weights,
    })


def write_table(frame, out=None):
    '''
    Writes a DataFrame as CSV with 17 significant digits.

    Parameters
    ----------
    frame : pd.DataFrame
    out : str, path or file object, default standard output
    '''
    target = sys.stdout if out is None or out == '-' else out
    frame.to_csv(target, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
