from __future__ import absolute_import, division, print_function

from .uzawa import (UzawaConfig, UzawaResult, IterationRecord, uzawa_solve,
                    energy_functional, hvi_residual, factor_or_fail)
from .maxwell import (MaxwellState, MaxwellStepper, build_step_rhs, update_B,
                      advance, step_coefficients)

__all__ = ['UzawaConfig', 'UzawaResult', 'IterationRecord', 'uzawa_solve',
           'energy_functional', 'hvi_residual', 'factor_or_fail',
           'MaxwellState', 'MaxwellStepper', 'build_step_rhs', 'update_B',
           'advance', 'step_coefficients']
