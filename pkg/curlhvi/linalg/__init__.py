from __future__ import absolute_import, division, print_function

from .solvers import (SolveStats, CholeskyFactor, cg_solve, cholesky_factor,
                      solve_with_factor, symmetry_error, probe_spd)

__all__ = ['SolveStats', 'CholeskyFactor', 'cg_solve', 'cholesky_factor',
           'solve_with_factor', 'symmetry_error', 'probe_spd']
