"""
Main imports from curlhvi.
"""
import logging

from curlhvi.core import (HVIError, ConfigurationError, CapacityError,
                          TopologyError, DomainError, UsageError, SPDError,
                          SolverError, get_option, set_option,
                          option_context, version, __version__,
                          short_version)
from curlhvi.mesh import Mesh2D, ProblemCoefficients, build_structured
from curlhvi.dg import (DGSpace, DoFVector, LoadFunctional,
                        assemble_bilinear, assemble_load, l2_project)
from curlhvi.nonsmooth import ExponentialDecayPotential
from curlhvi.linalg import cg_solve, cholesky_factor, solve_with_factor
from curlhvi.solver import (UzawaConfig, UzawaResult, uzawa_solve,
                            energy_functional, MaxwellState, MaxwellStepper)
from curlhvi.analysis import (E_LIN, StudyConfig, ConvergenceReport,
                              run_study, l2_error, energy_error, eoc)

__all__ = ["log_level",
           "HVIError", "ConfigurationError", "CapacityError",
           "TopologyError", "DomainError", "UsageError", "SPDError",
           "SolverError", "get_option", "set_option", "option_context",
           "version", "__version__", "short_version",
           "Mesh2D", "ProblemCoefficients", "build_structured",
           "DGSpace", "DoFVector", "LoadFunctional", "assemble_bilinear",
           "assemble_load", "l2_project", "ExponentialDecayPotential",
           "cg_solve", "cholesky_factor", "solve_with_factor",
           "UzawaConfig", "UzawaResult", "uzawa_solve", "energy_functional",
           "MaxwellState", "MaxwellStepper",
           "E_LIN", "StudyConfig", "ConvergenceReport", "run_study",
           "l2_error", "energy_error", "eoc"]


def log_level(level=logging.DEBUG, package='curlhvi'):
    "Set the logging level for curlhvi."
    stream = logging.StreamHandler()
    stream.setLevel(level)
    formatter = logging.Formatter('%(asctime)s - %(name)s -'
                                  '%(levelname)s - %(message)s')
    stream.setFormatter(formatter)
    logging.getLogger(package).addHandler(stream)
    logging.getLogger(package).setLevel(level)

# Usage example
# log_level(level=logging.INFO)
