from __future__ import absolute_import, division, print_function

from itertools import tee

import numpy as np

integer_types = (int, np.integer)


class HVIError(Exception):
    pass


class ConfigurationError(HVIError):
    pass


class CapacityError(HVIError):
    pass


class TopologyError(HVIError):
    pass


class DomainError(HVIError, ValueError):
    pass


class UsageError(HVIError, ValueError):
    pass


class SPDError(HVIError):
    "The matrix is not symmetric positive definite (penalty too small?)"
    pass


class SolverError(HVIError):
    pass


def is_int(n):
    return isinstance(n, integer_types)


def pairwise(iterator):
    a, b = tee(iterator)
    next(b, None)
    return zip(a, b)


def check_positive(name, value):
    "Raise a ConfigurationError unless value is a finite positive number."
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError('%s must be a number, got %r' % (name, value))
    if not np.isfinite(value) or value <= 0:
        raise ConfigurationError('%s must be strictly positive: %s'
                                 % (name, value))
    return value


def as_vector_values(field, x, y):
    """Evaluate a vector field callable ``field(x, y)`` on arrays and
    return an array of shape ``x.shape + (2,)``.

    The callable may return a pair of arrays (or scalars), or an array
    whose last axis has length 2.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    ret = field(x, y)
    if isinstance(ret, (tuple, list)):
        if len(ret) != 2:
            raise UsageError('vector field must return 2 components')
        return np.stack([np.broadcast_to(np.asarray(c, dtype=float), x.shape)
                         for c in ret], axis=-1)
    ret = np.asarray(ret, dtype=float)
    if ret.shape[-1:] != (2,):
        raise UsageError('vector field must return 2 components, got shape %s'
                         % (ret.shape,))
    return np.broadcast_to(ret, x.shape + (2,)).copy()


def as_scalar_values(field, x, y):
    "Evaluate a scalar callable on arrays, broadcast to ``x.shape``."
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.broadcast_to(np.asarray(field(x, y), dtype=float),
                           x.shape).copy()
