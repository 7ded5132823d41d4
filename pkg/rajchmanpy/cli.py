'''
Command line front end.

    rajchmanpy coeffs --xi 1/3 --max-n 1024 --method product --format csv
    rajchmanpy classify --poly 1,-1,-1
    rajchmanpy verify --xi 2/13 --alpha 0.6 --degree 4096 --gen 10 --vanish-origin
    rajchmanpy duality --trials 100 --seed 7

Exit codes: 0 success, 2 invalid input, 3 diagnostic cap exceeded (the
report is still written).
'''
import argparse
import logging
import sys

import numpy as np
import pandas as pd

from rajchmanpy.version import __version__
from rajchmanpy.core import RatioParam, CoefficientSeries, CantorSpec, LebesgueMeasure
from rajchmanpy.circlemeasure import (coefficient_table, rajchman_classify, pisot_check,
                                      parse_polynomial, cantor_stage)
from rajchmanpy.wiener import sup_norm_estimate, pairing
from rajchmanpy.support import (moment_vector, verify_support_pair, sup_over_S0,
                                discretize_measure, random_convex_combination)
from rajchmanpy.peaks import (PeakParams, build_peak_candidate, vanish_at_origin,
                              herglotz_weight_moments)
from rajchmanpy.exportapi import (table_to_frame, compare_tables, moments_to_frame,
                                  series_to_frame, atoms_to_frame, write_table, write_json)
from rajchmanpy.utils import Settings, DiagnosticCapError


__all__ = ['main', 'build_parser']

LOGGER = logging.getLogger('rajchmanpy')

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAPS = 3

# relative slack for comparing floating point sums with the analytic bound
_ROUNDING = 1e-12


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    '''Reports usage errors as exceptions so that main prints one line.'''

    def error(self, message):
        raise UsageError(message)


def _ratio(text):
    return RatioParam(text)


def _common():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=['csv', 'json'], default=None,
                        help='output format (default depends on the command)')
    common.add_argument('--out', default=None, help='output path (default standard output)')
    common.add_argument('--threads', type=int, default=None,
                        help='worker threads (default RAJCHMANPY_THREADS or 1)')
    common.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')
    return common


def build_parser():
    common = _common()
    parser = _Parser(prog='rajchmanpy', description='Fourier coefficients of Cantor measures, '
                     'modulus support functionals and peak function candidates.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    coeffs = commands.add_parser('coeffs', parents=[common], help='Fourier-Stieltjes coefficients')
    coeffs.add_argument('--xi', required=True)
    coeffs.add_argument('--max-n', type=int, default=256)
    coeffs.add_argument('--min-n', type=int, default=0)
    coeffs.add_argument('--method', choices=['product', 'oracle', 'both'], default='product')
    coeffs.add_argument('--tol', type=float, default=None)
    coeffs.add_argument('--stage', type=int, default=None)
    coeffs.set_defaults(handler=cmd_coeffs, default_format='csv')

    classify = commands.add_parser('classify', parents=[common], help='Rajchman classification')
    source = classify.add_mutually_exclusive_group(required=True)
    source.add_argument('--xi')
    source.add_argument('--poly', help='integer coefficients, highest degree first')
    classify.set_defaults(handler=cmd_classify, default_format='json')

    for name, handler, text in (('peak', cmd_peak, 'peak function candidate'),
                                ('verify', cmd_verify, 'peak candidate and support check')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('--xi', default='2/13')
        sub.add_argument('--alpha', type=float, default=0.6)
        sub.add_argument('--degree', type=int, default=None)
        sub.add_argument('--gen', type=int, default=None)
        sub.add_argument('--summation', choices=['fejer', 'none'], default=None)
        sub.add_argument('--grid', type=int, default=None, help='boundary grid of the sup norm')
        sub.add_argument('--vanish-origin', action='store_true')
        sub.set_defaults(handler=handler, default_format='json')
    commands.choices['verify'].add_argument('--tau', type=float, default=None)
    commands.choices['peak'].add_argument(
        '--series', action='store_true',
        help='csv output holds the candidate coefficients (j, re, im) instead of the weight moments')

    duality = commands.add_parser('duality', parents=[common], help='S0 duality trials')
    duality.add_argument('--trials', type=int, default=100)
    duality.add_argument('--seed', type=int, default=0)
    duality.add_argument('--max-degree', type=int, default=64)
    duality.add_argument('--combinations', type=int, default=500)
    duality.add_argument('--angles', type=int, default=None)
    duality.add_argument('--radii', type=int, default=None)
    duality.set_defaults(handler=cmd_duality, default_format='json')

    discretize = commands.add_parser('discretize', parents=[common],
                                     help='atoms of the discretized measure')
    target = discretize.add_mutually_exclusive_group(required=True)
    target.add_argument('--xi')
    target.add_argument('--lebesgue', action='store_true')
    discretize.add_argument('--stage', type=int, default=10)
    discretize.add_argument('-n', '--arcs', type=int, default=64)
    discretize.set_defaults(handler=cmd_discretize, default_format='csv')
    return parser


def _settings(args):
    if args.threads is None:
        return Settings.from_env()
    if args.threads < 1:
        raise ValueError('threads must be at least 1')
    return Settings.from_env(threads=args.threads)


def _emit(args, frame=None, document=None):
    if args.format == 'csv':
        if frame is None:
            raise ValueError(f'{args.command} writes json only')
        write_table(frame, args.out)
    else:
        write_json(document, args.out)


def cmd_coeffs(args, settings):
    xi = _ratio(args.xi)
    if args.max_n < args.min_n:
        raise ValueError('max-n must not be below min-n')
    indices = range(args.min_n, args.max_n + 1)
    if args.method == 'both':
        product = coefficient_table(xi, indices, 'product', tol=args.tol, threads=settings.threads)
        oracle = coefficient_table(xi, indices, 'oracle', stage=args.stage)
        frame = compare_tables(product, oracle)
    else:
        table = coefficient_table(xi, indices, args.method, tol=args.tol, stage=args.stage,
                                  threads=settings.threads)
        frame = table_to_frame(table)
    document = {'command': 'coeffs', 'xi': str(xi), 'method': args.method,
                'rows': frame.to_dict(orient='list')}
    _emit(args, frame, document)
    return EXIT_OK


def cmd_classify(args, settings):
    document = {'command': 'classify'}
    if args.xi is not None:
        verdict = rajchman_classify(_ratio(args.xi))
        document.update(verdict=verdict.verdict.value, evidence=verdict.evidence)
    else:
        coefficients = parse_polynomial(args.poly)
        result = pisot_check(coefficients)
        document.update(polynomial=coefficients, pisot=result.status.value,
                        dominant_root=result.dominant_root, roots=result.roots,
                        conjugate_moduli=result.conjugate_moduli,
                        irreducible=result.irreducible)
        if isinstance(result.dominant_root, float) and result.dominant_root > 2:
            verdict = rajchman_classify(RatioParam.from_polynomial(coefficients))
            document.update(verdict=verdict.verdict.value, evidence=verdict.evidence)
    _emit(args, document=document)
    return EXIT_OK


def _peak_settings(args, settings):
    changes = {}
    if args.summation is not None:
        changes['summation'] = args.summation
    if args.grid is not None:
        changes['sup_grid'] = args.grid
    return settings.replace(**changes)


def _candidate(args, settings):
    params = PeakParams(args.alpha, args.xi, generations=args.gen, degree=args.degree)
    weight = herglotz_weight_moments(params, threads=settings.threads)
    candidate = build_peak_candidate(params, settings=settings, weight=weight)
    if args.vanish_origin:
        candidate = vanish_at_origin(candidate)
    return params, weight, candidate


def cmd_peak(args, settings):
    settings = _peak_settings(args, settings)
    params, weight, candidate = _candidate(args, settings)
    frame = series_to_frame(candidate.series) if args.series else moments_to_frame(weight)
    _emit(args, frame, {'command': 'peak', 'candidate': candidate.to_dict()})
    return EXIT_OK


def cmd_verify(args, settings):
    settings = _peak_settings(args, settings)
    params, _, candidate = _candidate(args, settings)
    y = moment_vector(CantorSpec(params.xi), params.degree, threads=settings.threads)
    endpoints = cantor_stage(params.xi, params.generations).endpoints()
    report = verify_support_pair(candidate.series, y, tau=args.tau, grid=settings.sup_grid,
                                 support_points=endpoints)
    _emit(args, document={'command': 'verify', 'status': 'completed',
                          'candidate': candidate.to_dict(coefficients=False),
                          'report': report.to_dict()})
    return EXIT_OK


def _random_sparse_series(rng, max_degree):
    degree = int(rng.integers(1, max_degree + 1))
    size = int(rng.integers(1, min(8, degree + 1) + 1))
    support = rng.choice(degree + 1, size=size, replace=False)
    coefficients = np.zeros(degree + 1, dtype=complex)
    coefficients[support] = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    if not np.any(coefficients):
        coefficients[0] = 1.0
    return CoefficientSeries(coefficients)


def cmd_duality(args, settings):
    if args.trials < 1 or args.combinations < 0 or args.max_degree < 1:
        raise ValueError('trials and max-degree must be positive, combinations nonnegative')
    rng = np.random.default_rng(args.seed)
    per_trial = np.full(args.trials, args.combinations // args.trials)
    per_trial[:args.combinations % args.trials] += 1
    rows = []
    for trial in range(args.trials):
        a = _random_sparse_series(rng, args.max_degree)
        result = sup_over_S0(a, args.angles, args.radii)
        bracket = sup_norm_estimate(a, settings.search_angles if args.angles is None
                                    else args.angles)
        combination_max = 0.0
        for _ in range(per_trial[trial]):
            x = moment_vector(random_convex_combination(rng, int(rng.integers(1, 9))), a.degree)
            combination_max = max(combination_max, abs(pairing(a, x)))
        upper = bracket.upper * (1 + _ROUNDING)
        violation = (result.best > upper or result.best < bracket.lower - result.resolution
                     or combination_max > upper)
        rows.append({'trial': trial, 'degree': a.degree, 'best': result.best,
                     'lower': bracket.lower, 'upper': bracket.upper,
                     'resolution': result.resolution, 'combination_max': combination_max,
                     'violation': bool(violation)})
    frame = pd.DataFrame(rows)
    violations = int(frame['violation'].sum())
    _emit(args, frame, {'command': 'duality', 'seed': args.seed, 'trials': args.trials,
                        'combinations': args.combinations, 'violations': violations,
                        'rows': frame.to_dict(orient='list')})
    print(f'violations: {violations}', file=sys.stderr)
    return EXIT_OK


def cmd_discretize(args, settings):
    measure = LebesgueMeasure() if args.lebesgue else CantorSpec(_ratio(args.xi), args.stage)
    atoms = discretize_measure(measure, args.arcs)
    frame = atoms_to_frame(atoms)
    _emit(args, frame, {'command': 'discretize', 'measure': repr(measure), 'arcs': args.arcs,
                        'atoms': frame.to_dict(orient='list')})
    return EXIT_OK


def _configure_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    LOGGER.handlers[:] = [handler]
    LOGGER.setLevel(logging.DEBUG if verbose else logging.WARNING)
    LOGGER.propagate = False


def main(argv=None):
    '''
    Runs one subcommand and returns the exit code.

    Parameters
    ----------
    argv : list of str, default ``sys.argv[1:]``
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f'rajchmanpy: error: {exc}', file=sys.stderr)
        return EXIT_INVALID
    _configure_logging(args.verbose)
    if args.format is None:
        args.format = args.default_format
    try:
        settings = _settings(args)
        return args.handler(args, settings)
    except DiagnosticCapError as exc:
        print(f'rajchmanpy: {exc}', file=sys.stderr)
        document = {'command': args.command, 'status': 'aborted', 'error': str(exc)}
        if exc.report is not None:
            document['candidate'] = exc.report.to_dict(coefficients=False)
        write_json(document, args.out)
        return EXIT_CAPS
    except (ValueError, ZeroDivisionError) as exc:
        print(f'rajchmanpy: error: {exc}', file=sys.stderr)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
