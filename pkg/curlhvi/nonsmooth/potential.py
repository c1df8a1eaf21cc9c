"""
Radial potential psi(xi) = int_0^|xi| omega(t) dt with the decaying
density omega(t) = (a - b) exp(-beta t) + b, its Clarke subdifferential
and generalized directional derivative.

psi is not convex for a > b: omega decreases, so the current law it
describes is non-monotone. Every function below is vectorized over the
leading axes of its 2-vector arguments.
"""
from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..core.config import get_option
from ..core.utils import ConfigurationError, DomainError

logger = logging.getLogger(__name__)

__all__ = ['ExponentialDecayPotential', 'omega', 'psi', 'subgradient',
           'psi0']


def _norm(xi):
    xi = np.asarray(xi, dtype=float)
    return np.sqrt((xi ** 2).sum(axis=-1))


class ExponentialDecayPotential(object):
    """Parameters (a, b, beta) of the potential.

    Standard mode needs a > b > 0 and beta > 0; a = b = 0 is the linear
    mode, where the nonsmooth term vanishes.
    """
    def __init__(self, a=None, b=None, beta=None, tol_zero=None):
        if a is None:
            a = get_option('potential.a')
        if b is None:
            b = get_option('potential.b')
        if beta is None:
            beta = get_option('potential.beta')
        if tol_zero is None:
            tol_zero = get_option('potential.tol_zero')
        a, b, beta, tol_zero = float(a), float(b), float(beta), float(tol_zero)
        if not beta > 0:
            raise ConfigurationError('beta must be positive: %s' % beta)
        if tol_zero < 0:
            raise ConfigurationError('tol_zero must be non-negative: %s'
                                     % tol_zero)
        if not (a == 0 and b == 0) and not a > b > 0:
            raise ConfigurationError('Expected a > b > 0 (or a = b = 0 for '
                                     'the linear mode), got a=%s, b=%s'
                                     % (a, b))
        self.a = a
        self.b = b
        self.beta = beta
        self.tol_zero = tol_zero

    @classmethod
    def linear(cls, beta=1.0):
        "The potential with a = b = 0."
        return cls(0.0, 0.0, beta)

    @property
    def is_linear(self):
        return self.a == 0 and self.b == 0

    @property
    def m(self):
        "Relaxed monotonicity constant beta (a - b)."
        return self.beta * (self.a - self.b)

    @property
    def growth(self):
        "Constants (c0, c1) with |eta| <= c0 + c1 |xi| for eta in d psi(xi)."
        return self.a, 0.0

    def check_smallness(self, epsilon):
        """Warn when m >= epsilon; the discrete problem may then lose its
        uniqueness. Returns True when the condition m < epsilon holds."""
        if self.m < epsilon:
            return True
        logger.warning('Relaxed monotonicity constant m=%g is not smaller '
                       'than epsilon=%g', self.m, epsilon)
        return False

    def omega(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < 0):
            raise DomainError('omega is defined for t >= 0')
        return (self.a - self.b) * np.exp(-self.beta * t) + self.b

    def psi(self, xi):
        r = _norm(xi)
        return self.b * r - (self.a - self.b) * np.expm1(-self.beta * r) \
            / self.beta

    def subgradient(self, xi):
        """Element of the Clarke subdifferential: the gradient
        omega(|xi|) xi / |xi| away from the kink, 0 at |xi| <= tol_zero."""
        xi = np.asarray(xi, dtype=float)
        r = _norm(xi)
        smooth = r > self.tol_zero
        scale = np.where(smooth, self.omega(r) / np.where(smooth, r, 1.0), 0.0)
        return xi * scale[..., None]

    def psi0(self, xi, v):
        """Generalized directional derivative psi0(xi; v), the maximum of
        zeta . v over the subdifferential at xi."""
        xi = np.asarray(xi, dtype=float)
        v = np.asarray(v, dtype=float)
        r = _norm(xi)
        smooth = r > self.tol_zero
        safe = np.where(smooth, r, 1.0)
        directional = self.omega(r) * (xi * v).sum(axis=-1) / safe
        return np.where(smooth, directional, self.a * _norm(v))

    def __repr__(self):
        return 'ExponentialDecayPotential(a=%g, b=%g, beta=%g)' % (
            self.a, self.b, self.beta)


def omega(pot, t):
    return pot.omega(t)


def psi(pot, xi):
    return pot.psi(xi)


def subgradient(pot, xi):
    return pot.subgradient(xi)


def psi0(pot, xi, v):
    return pot.psi0(xi, v)
