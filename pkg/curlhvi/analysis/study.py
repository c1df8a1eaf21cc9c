"""
Convergence studies: solve the stationary problem on a sequence of
structured meshes and tabulate errors and empirical orders against an
analytic or a nested discrete reference.
"""
from __future__ import absolute_import, division, print_function

import logging
from collections import namedtuple

import numpy as np
import pandas as pd
from tabulate import tabulate

from ..core.config import get_option
from ..core.utils import ConfigurationError, is_int, pairwise
from ..dg.assembly import assemble_bilinear, assemble_load
from ..dg.space import DGSpace, SUPPORTED_DEGREES
from ..mesh.mesh2d import ProblemCoefficients, build_structured
from ..nonsmooth.potential import ExponentialDecayPotential
from ..solver.uzawa import UzawaConfig, uzawa_solve
from .norms import (E_LIN, DiscreteReference, energy_error, eoc, l2_error,
                    sinusoidal_source)

logger = logging.getLogger(__name__)

__all__ = ['StudyConfig', 'ConvergenceReport', 'LevelSolution',
           'solve_level', 'run_study', 'parse_reference', 'REPORT_COLUMNS']

REPORT_COLUMNS = ['level', 'h', 'dofs', 'l2_error', 'l2_order',
                  'energy_error', 'energy_order', 'uzawa_iterations',
                  'converged']

MODES = ('hvi', 'linear')

LevelSolution = namedtuple('LevelSolution', ['level', 'mesh', 'space', 'A',
                                             'f', 'result'])


def parse_reference(reference):
    """Normalize a reference string: 'analytic', 'nested:L' or
    ('nested', L) into ('analytic', None) or ('nested', L)."""
    if isinstance(reference, tuple) and len(reference) == 2:
        kind, level = reference
    elif isinstance(reference, str):
        kind, _, level = reference.partition(':')
        level = level or None
    else:
        raise ConfigurationError('Invalid reference %r' % (reference,))
    kind = kind.strip().lower()
    if kind == 'analytic':
        if level is not None:
            raise ConfigurationError('The analytic reference takes no level')
        return ('analytic', None)
    if kind == 'nested':
        try:
            level = int(level)
        except (TypeError, ValueError):
            raise ConfigurationError('Nested reference needs a level, got %r'
                                     % (reference,))
        return ('nested', level)
    raise ConfigurationError("Reference must be 'analytic' or 'nested:L', "
                             "got %r" % (reference,))


class StudyConfig(object):
    """Parameters of a convergence study.

    Omitted numerical parameters are read from the option registry.
    """
    def __init__(self, levels=(1, 2, 3, 4), reference='analytic', eta=None,
                 a=None, b=None, beta=None, eps_stop=None, l_max=None,
                 mode='hvi', epsilon=None, mu=None, degree=None):
        levels = list(levels)
        for level in levels:
            if not is_int(level) or level < 0:
                raise ConfigurationError('Invalid level %r' % (level,))
        if any(l1 >= l2 for l1, l2 in pairwise(levels)):
            raise ConfigurationError('Levels must be strictly increasing: %s'
                                     % levels)
        if mode not in MODES:
            raise ConfigurationError('mode must be one of %s, got %r'
                                     % (MODES, mode))
        self.levels = levels
        self.reference = parse_reference(reference)
        if self.reference[0] == 'nested' and levels \
           and self.reference[1] <= levels[-1]:
            raise ConfigurationError('The nested reference level %d must '
                                     'exceed the finest study level %d'
                                     % (self.reference[1], levels[-1]))
        self.mode = mode
        self.coefficients = ProblemCoefficients(epsilon, mu, eta)
        self.uzawa = UzawaConfig(eps_stop, l_max)
        if mode == 'linear':
            self.potential = ExponentialDecayPotential.linear(
                get_option('potential.beta') if beta is None else beta)
        else:
            self.potential = ExponentialDecayPotential(a, b, beta)
        degree = get_option('dg.degree') if degree is None else degree
        if degree not in SUPPORTED_DEGREES:
            raise ConfigurationError('degree must be one of %s, got %r'
                                     % (SUPPORTED_DEGREES, degree))
        self.degree = degree

    @property
    def eta(self):
        return self.coefficients.eta

    def __repr__(self):
        return ('StudyConfig(levels=%s, reference=%s, mode=%s, %r, %r, %r)'
                % (self.levels, self.reference, self.mode, self.coefficients,
                   self.potential, self.uzawa))


class ConvergenceReport(object):
    """Rows of a convergence study, held in a pandas DataFrame.

    ``finest`` is the :class:`LevelSolution` of the finest study level
    (None for an empty study).
    """
    def __init__(self, rows=(), finest=None):
        self.table = pd.DataFrame(list(rows), columns=REPORT_COLUMNS)
        self.finest = finest

    def __len__(self):
        return len(self.table)

    @property
    def all_converged(self):
        return bool(self.table['converged'].all())

    def to_csv(self, path_or_buf=None):
        "Write (or return) the CSV text; 6 significant digits, NaN as ''."
        return self.table.to_csv(path_or_buf, index=False,
                                 float_format='%.6g', na_rep='')

    def to_text(self):
        "The report as a text table."
        precision = get_option('display.precision')
        return tabulate(self.table, headers='keys', showindex=False,
                        floatfmt='.%dg' % precision, missingval='')

    def __repr__(self):
        return '<ConvergenceReport %d rows>' % len(self)


def solve_level(level, config, source=None):
    """Build the mesh of ``level``, assemble and run the Uzawa iteration.

    Returns a :class:`LevelSolution`.
    """
    coeffs = config.coefficients
    if source is None:
        source = sinusoidal_source(coeffs.epsilon, coeffs.mu)
    mesh = build_structured(level)
    space = DGSpace(mesh, config.degree)
    A = assemble_bilinear(space, coeffs)
    f = assemble_load(space, source)
    result = uzawa_solve(A, f, config.potential, space, config.uzawa,
                         epsilon=coeffs.epsilon, eta=coeffs.eta)
    return LevelSolution(level, mesh, space, A, f, result)


def _orders(levels, errors):
    "eoc scaled by the level gaps (orders per halving of h)."
    if len(errors) < 2:
        return [np.nan] * len(errors)
    gaps = np.array([b - a for a, b in pairwise(levels)], dtype=float)
    return [np.nan] + list(eoc(errors) / gaps)


def run_study(config, source=None):
    """Solve every level of ``config`` and compare with its reference.

    A level whose Uzawa iteration does not converge is reported with
    ``converged=False``; the study continues.

    Returns
    -------
    ConvergenceReport
    """
    if not config.levels:
        return ConvergenceReport()
    kind, ref_level = config.reference
    if kind == 'nested':
        logger.info('Solving the reference level %d', ref_level)
        sol = solve_level(ref_level, config, source)
        if not sol.result.converged:
            logger.warning('The reference solution did not converge')
        reference = DiscreteReference(sol.space, sol.result.E)
    else:
        reference = E_LIN
    rows = []
    for level in config.levels:
        sol = solve_level(level, config, source)
        E = sol.result.E
        l2 = l2_error(sol.space, E, reference)
        energy = energy_error(sol.space, E, reference, config.eta)
        if not sol.result.converged:
            logger.warning('Level %d: Uzawa did not converge in %d '
                           'iterations', level, sol.result.iterations)
        logger.info('Level %d: %d dofs, L2 error %.6g, energy error %.6g',
                    level, sol.space.n_dofs, l2, energy)
        rows.append(dict(level=level, h=2.0 ** -level, dofs=sol.space.n_dofs,
                         l2_error=l2, energy_error=energy,
                         uzawa_iterations=sol.result.iterations,
                         converged=sol.result.converged))
    levels = [row['level'] for row in rows]
    l2_orders = _orders(levels, [row['l2_error'] for row in rows])
    energy_orders = _orders(levels, [row['energy_error'] for row in rows])
    for row, l2_order, energy_order in zip(rows, l2_orders, energy_orders):
        row['l2_order'] = l2_order
        row['energy_order'] = energy_order
    return ConvergenceReport(rows, finest=sol)
