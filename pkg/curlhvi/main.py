"""
Command line: ``curlhvi solve`` for a single level and ``curlhvi study``
for a convergence study.

Exit codes: 0 on success, 2 on a configuration error, 3 when a solver
fails or does not converge.
"""
from __future__ import absolute_import, division, print_function

import argparse
import logging
import sys

from tabulate import tabulate

from . import log_level
from .core.utils import (HVIError, ConfigurationError, CapacityError,
                         DomainError, UsageError, SPDError, SolverError)
from .analysis.norms import energy_norm
from .analysis.study import StudyConfig, run_study, solve_level
from .io.export import (write_field_csv, write_iteration_log, write_matrix,
                        write_mesh_csv)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3


def _parse_levels(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(item) for item in text.split(',')]
    except ValueError:
        raise ConfigurationError('Invalid level list %r' % (text,))


# key of the config file -> (argparse destination, converter)
_CONFIG_KEYS = {
    'levels': ('levels', _parse_levels),
    'level': ('level', int),
    'eta': ('eta', float),
    'a': ('a', float),
    'b': ('b', float),
    'beta': ('beta', float),
    'mode': ('mode', str),
    'reference': ('reference', str),
    'eps': ('eps', float),
    'max_iters': ('max_iters', int),
    'out': ('out', str),
    'epsilon': ('epsilon', float),
    'mu': ('mu', float),
    'degree': ('degree', int),
}

_DEFAULTS = dict(levels=[1, 2, 3, 4], level=3, mode='hvi',
                 reference='analytic')


def _levels_arg(text):
    try:
        return _parse_levels(text)
    except ConfigurationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def read_config_file(path):
    """Read ``key=value`` lines (``#`` starts a comment) into a dict of
    converted values keyed by argparse destination."""
    values = {}
    try:
        with open(path) as stream:
            lines = stream.readlines()
    except IOError as exc:
        raise ConfigurationError('Cannot read config file %s: %s'
                                 % (path, exc))
    for lineno, line in enumerate(lines, 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigurationError('%s:%d: expected key=value'
                                     % (path, lineno))
        key, value = (s.strip() for s in line.split('=', 1))
        key = key.replace('-', '_')
        if key not in _CONFIG_KEYS:
            raise ConfigurationError('%s:%d: unknown key %r'
                                     % (path, lineno, key))
        dest, convert = _CONFIG_KEYS[key]
        try:
            values[dest] = convert(value)
        except ValueError:
            raise ConfigurationError('%s:%d: invalid value %r for %s'
                                     % (path, lineno, value, key))
    return values


def _add_common(parser):
    parser.add_argument('--config', help='key=value configuration file')
    parser.add_argument('--eta', type=float, help='penalty constant')
    parser.add_argument('--a', type=float, help='potential parameter a')
    parser.add_argument('--b', type=float, help='potential parameter b')
    parser.add_argument('--beta', type=float, help='potential decay rate')
    parser.add_argument('--mode', choices=['hvi', 'linear'])
    parser.add_argument('--eps', type=float, help='Uzawa tolerance')
    parser.add_argument('--max-iters', dest='max_iters', type=int,
                        help='maximal number of Uzawa iterations')
    parser.add_argument('--epsilon', type=float, help='permittivity')
    parser.add_argument('--mu', type=float, help='permeability')
    parser.add_argument('--degree', type=int, choices=[1, 2])
    parser.add_argument('--dump-matrix', dest='dump_matrix',
                        help='Matrix Market file of the IPDG matrix')
    parser.add_argument('--dump-field', dest='dump_field',
                        help='CSV of E at the quadrature points')
    parser.add_argument('-v', '--verbose', action='count', default=0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='curlhvi',
        description='IPDG solver for H(curl)-elliptic hemivariational '
                    'inequalities')
    sub = parser.add_subparsers(dest='command')
    solve = sub.add_parser('solve', help='solve on a single mesh level')
    solve.add_argument('--level', type=int)
    solve.add_argument('--dump-mesh', dest='dump_mesh',
                       help='CSV of the triangles')
    solve.add_argument('--dump-log', dest='dump_log',
                       help='CSV of the Uzawa iterations')
    _add_common(solve)
    study = sub.add_parser('study', help='convergence study')
    study.add_argument('--levels', type=_levels_arg,
                       help='comma separated levels, e.g. 1,2,3,4')
    study.add_argument('--reference', help="'analytic' or 'nested:L'")
    study.add_argument('--out', help='CSV report')
    _add_common(study)
    return parser


def _merge(args):
    "Defaults, then the config file, then explicit flags."
    values = dict(_DEFAULTS)
    if args.config:
        values.update(read_config_file(args.config))
    for key, value in vars(args).items():
        if value is not None:
            values[key] = value
    return values


def _study_config(values, levels):
    return StudyConfig(levels=levels,
                       reference=values.get('reference', 'analytic'),
                       eta=values.get('eta'), a=values.get('a'),
                       b=values.get('b'), beta=values.get('beta'),
                       eps_stop=values.get('eps'),
                       l_max=values.get('max_iters'), mode=values['mode'],
                       epsilon=values.get('epsilon'), mu=values.get('mu'),
                       degree=values.get('degree'))


def _set_verbosity(verbose):
    if verbose:
        log_level(logging.DEBUG if verbose > 1 else logging.INFO)


def run_solve(values):
    config = _study_config(dict(values, reference='analytic'),
                           [values['level']])
    sol = solve_level(values['level'], config)
    result = sol.result
    table = [[sol.level, sol.space.n_dofs, result.iterations,
              result.converged, sol.space.norm_l2(result.E),
              energy_norm(sol.space, result.E, config.eta)]]
    print(tabulate(table, headers=['level', 'dofs', 'iterations',
                                   'converged', 'L2 norm', 'energy norm'],
                   floatfmt='.6g'))
    if values.get('dump_matrix'):
        write_matrix(sol.A, values['dump_matrix'])
    if values.get('dump_field'):
        write_field_csv(sol.space, result.E, values['dump_field'])
    if values.get('dump_mesh'):
        write_mesh_csv(sol.mesh, values['dump_mesh'])
    if values.get('dump_log'):
        write_iteration_log(result, values['dump_log'])
    return EXIT_OK if result.converged else EXIT_SOLVER


def run_study_command(values):
    config = _study_config(values, values['levels'])
    report = run_study(config)
    print(report.to_text())
    if values.get('out'):
        report.to_csv(values['out'])
    # dumps refer to the finest study level
    sol = report.finest
    if sol is not None:
        if values.get('dump_matrix'):
            write_matrix(sol.A, values['dump_matrix'])
        if values.get('dump_field'):
            write_field_csv(sol.space, sol.result.E, values['dump_field'])
    return EXIT_OK if report.all_converged else EXIT_SOLVER


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_CONFIG
    _set_verbosity(args.verbose)
    try:
        values = _merge(args)
        if args.command == 'solve':
            return run_solve(values)
        return run_study_command(values)
    except (ConfigurationError, CapacityError, DomainError,
            UsageError) as exc:
        print('curlhvi: configuration error: %s' % exc, file=sys.stderr)
        return EXIT_CONFIG
    except (SPDError, SolverError) as exc:
        print('curlhvi: solver failure: %s' % exc, file=sys.stderr)
        return EXIT_SOLVER
    except HVIError as exc:
        print('curlhvi: %s' % exc, file=sys.stderr)
        return EXIT_SOLVER
