import json
import math
import numbers
import sys

import numpy as np


__all__ = ['series_to_dict', 'build_json', 'write_json', 'SCHEMA_VERSION']

SCHEMA_VERSION = '1'


def series_to_dict(series):
    '''
    Degree, coefficients as ``[re, im]`` pairs and l1 norm of a
    CoefficientSeries. The truncation residual is kept as an extra key.
    '''
    coefficients = series.coefficients
    return {
        'degree': series.degree,
        'coefficients': np.column_stack([coefficients.real, coefficients.imag]).tolist(),
        'l1_norm': series.l1_norm,
        'residual': series.residual,
    }


def _float(value):
    if math.isnan(value):
        return 'NaN'
    if math.isinf(value):
        return 'Infinity' if value > 0 else '-Infinity'
    text = format(value, '.17g')
    if text.lstrip('-').isdigit():
        text += '.0'
    return text


def _encode(obj, level, indent):
    pad = ' ' * (indent * (level + 1))
    end = ' ' * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if hasattr(obj, 'to_dict'):
        return _encode(obj.to_dict(), level, indent)
    if isinstance(obj, numbers.Integral):
        return str(int(obj))
    if isinstance(obj, numbers.Real):
        return _float(float(obj))
    if isinstance(obj, numbers.Complex):
        return _encode([obj.real, obj.imag], level, indent)
    if isinstance(obj, dict):
        if not obj:
            return '{}'
        items = [f'{pad}{json.dumps(str(k))}: {_encode(obj[k], level + 1, indent)}'
                 for k in sorted(obj, key=str)]
        return '{\n' + ',\n'.join(items) + '\n' + end + '}'
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = list(obj)
        if not items:
            return '[]'
        if all(isinstance(x, numbers.Real) for x in items):
            return '[' + ', '.join(_encode(x, level + 1, indent) for x in items) + ']'
        return '[\n' + ',\n'.join(pad + _encode(x, level + 1, indent) for x in items) + '\n' + end + ']'
    raise TypeError(f'{type(obj).__name__} is not serializable')


def build_json(document, indent=2):
    '''
    JSON text of a document with sorted keys and every float written with
    17 significant digits. A top level ``schema_version`` is added.

    Parameters
    ----------
    document : dict
    indent : int, default 2

    Returns
    -------
    text : str
    '''
    document = dict(document)
    document.setdefault('schema_version', SCHEMA_VERSION)
    return _encode(document, 0, indent) + '\n'


def write_json(document, out=None):
    '''
    Parameters
    ----------
    document : dict
    out : str or path, default standard output
    '''
    text = build_json(document)
    if out is None or out == '-':
        sys.stdout.write(text)
        return
    with open(out, 'w', newline='\n') as f:
        f.write(text)
