from __future__ import absolute_import, division, print_function

from .norms import (AnalyticReference, DiscreteReference, E_LIN,
                    sinusoidal_source, l2_error, energy_error, energy_norm,
                    eoc)
from .study import (StudyConfig, ConvergenceReport, LevelSolution,
                    solve_level, run_study, parse_reference, REPORT_COLUMNS)

__all__ = ['AnalyticReference', 'DiscreteReference', 'E_LIN',
           'sinusoidal_source', 'l2_error', 'energy_error', 'energy_norm',
           'eoc', 'StudyConfig', 'ConvergenceReport', 'LevelSolution',
           'solve_level', 'run_study', 'parse_reference', 'REPORT_COLUMNS']
