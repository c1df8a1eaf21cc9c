from __future__ import absolute_import, division, print_function

from .utils import (HVIError, ConfigurationError, CapacityError,
                    TopologyError, DomainError, UsageError, SPDError,
                    SolverError, integer_types)
from .config import get_option, set_option, option_context

__version__ = '0.1.0'
version = __version__
short_version = __version__

__all__ = ["HVIError", "ConfigurationError", "CapacityError",
           "TopologyError", "DomainError", "UsageError", "SPDError",
           "SolverError", "integer_types",
           "get_option", "set_option", "option_context",
           "version", "__version__", "short_version"]
