"""
Backward Euler time stepping of the 2D Maxwell system with a nonsmooth
current law. Each step solves a stationary inequality with

    epsilon = tilde_eps / k,  mu = tilde_mu / k,
    l~^n = l^n + curl_h(tilde_mu^-1 B^{n-1}) + epsilon E^{n-1}

and then updates the out-of-plane magnetic field B^n = B^{n-1} - k curl_h E^n.
B lives in the broken scalar space of the same degree; its curl is the
elementwise rotated gradient (dB/dy, -dB/dx), without face terms.
"""
from __future__ import absolute_import, division, print_function

import logging
from functools import partial

from ..core.utils import UsageError, check_positive
from ..dg.assembly import (LoadFunctional, assemble_bilinear, assemble_load,
                           assemble_samples_load)
from ..dg.space import DGSpace, DoFVector
from ..mesh.mesh2d import ProblemCoefficients
from ..nonsmooth.potential import ExponentialDecayPotential
from .uzawa import UzawaConfig, factor_or_fail, uzawa_solve

logger = logging.getLogger(__name__)

__all__ = ['MaxwellState', 'MaxwellStepper', 'build_step_rhs', 'update_B',
           'advance', 'step_coefficients']


class MaxwellState(object):
    """Fields (E, B) at time t, with the step k and the physical
    coefficients tilde_eps, tilde_mu."""
    def __init__(self, E, B, t=0.0, k=1.0, tilde_eps=1.0, tilde_mu=1.0):
        if not isinstance(E, DoFVector) or E.space.components != 2:
            raise UsageError('E must be a DoFVector of a vector DG space')
        if not isinstance(B, DoFVector) or B.space.components != 1:
            raise UsageError('B must be a DoFVector of a scalar DG space')
        if B.space.mesh is not E.space.mesh:
            raise UsageError('E and B must live on the same mesh')
        if B.space.degree != E.space.degree:
            raise UsageError('E and B spaces must have the same degree')
        self.E = E
        self.B = B
        self.t = float(t)
        self.k = check_positive('k', k)
        self.tilde_eps = check_positive('tilde_eps', tilde_eps)
        self.tilde_mu = check_positive('tilde_mu', tilde_mu)

    @classmethod
    def zero(cls, space, **kwds):
        "The zero state on a vector DG space."
        B_space = DGSpace(space.mesh, space.degree, components=1)
        return cls(DoFVector(space), DoFVector(B_space), **kwds)

    @property
    def epsilon(self):
        return self.tilde_eps / self.k

    @property
    def mu(self):
        return self.tilde_mu / self.k

    def replace(self, **kwds):
        args = dict(E=self.E, B=self.B, t=self.t, k=self.k,
                    tilde_eps=self.tilde_eps, tilde_mu=self.tilde_mu)
        args.update(kwds)
        return MaxwellState(**args)

    def __repr__(self):
        return '<MaxwellState t=%g k=%g>' % (self.t, self.k)


def step_coefficients(state, eta=None):
    "Coefficients (tilde_eps / k, tilde_mu / k, eta) of one step."
    return ProblemCoefficients(state.tilde_eps, state.tilde_mu,
                               eta).scaled(state.k)


def build_step_rhs(state, l_n=None):
    """Load functional of l~^n for the step leaving ``state``.

    ``l_n`` is a callable ``(x, y) -> (lx, ly)``; None means no source.
    """
    space = state.E.space
    if l_n is None:
        load = LoadFunctional(space)
    else:
        load = assemble_load(space, l_n)
    curl_B = state.B.space.quadrature_curls(state.B) / state.tilde_mu
    memory = state.epsilon * space.quadrature_values(state.E)
    return load + assemble_samples_load(space, curl_B + memory)


def update_B(state, E_new):
    "B^{n-1} - k curl_h E^n, exact in the broken scalar space."
    if E_new.space.mesh is not state.B.space.mesh:
        raise UsageError('E and B must live on the same mesh')
    B_space = state.B.space
    samples = (B_space.quadrature_values(state.B)[..., 0]
               - state.k * E_new.space.quadrature_curls(E_new))
    return B_space.project_samples(samples[..., None])


def advance(state, l_n, pot, config=None, eta=None, A=None, factor=None):
    """One backward Euler step: build l~^n, solve the stationary
    inequality with (epsilon, mu), update B and move t by k.

    Returns the new state and the :class:`UzawaResult` of the step.
    """
    space = state.E.space
    coeffs = step_coefficients(state, eta)
    if A is None:
        A = assemble_bilinear(space, coeffs)
    if factor is None:
        factor = factor_or_fail(A, coeffs.eta)
    rhs = build_step_rhs(state, l_n)
    result = uzawa_solve(A, rhs, pot, space, config, epsilon=coeffs.epsilon,
                         eta=coeffs.eta, factor=factor)
    B = update_B(state, result.E)
    new_state = state.replace(E=result.E, B=B, t=state.t + state.k)
    logger.debug('Step to t=%g: %d Uzawa iterations', new_state.t,
                 result.iterations)
    return new_state, result


class MaxwellStepper(object):
    """Time loop with a fixed step: the IPDG matrix and its factor are
    built once and reused by every step.

    Parameters
    ----------
    space : DGSpace
        vector DG space of E
    tilde_eps, tilde_mu : float
    k : float
        time step
    eta : float
        penalty constant (registry default if None)
    potential : ExponentialDecayPotential
    config : UzawaConfig
    """
    def __init__(self, space, tilde_eps=1.0, tilde_mu=1.0, k=1.0, eta=None,
                 potential=None, config=None):
        if potential is None:
            potential = ExponentialDecayPotential()
        self.space = space
        self.B_space = DGSpace(space.mesh, space.degree, components=1)
        self.potential = potential
        self.config = config if config is not None else UzawaConfig()
        self.k = check_positive('k', k)
        self.tilde_eps = check_positive('tilde_eps', tilde_eps)
        self.tilde_mu = check_positive('tilde_mu', tilde_mu)
        self.coeffs = ProblemCoefficients(self.tilde_eps, self.tilde_mu,
                                          eta).scaled(self.k)
        self.A = assemble_bilinear(space, self.coeffs)
        self.factor = factor_or_fail(self.A, self.coeffs.eta)
        self.results = []

    def initial_state(self, E0=None, B0=None, t0=0.0):
        E0 = DoFVector(self.space) if E0 is None else E0
        B0 = DoFVector(self.B_space) if B0 is None else B0
        return MaxwellState(E0, B0, t0, self.k, self.tilde_eps, self.tilde_mu)

    def _check_state(self, state):
        if state.E.space is not self.space or state.k != self.k \
           or state.tilde_eps != self.tilde_eps \
           or state.tilde_mu != self.tilde_mu:
            raise UsageError('State does not match the stepper')

    def build_step_rhs(self, state, l_n=None):
        return build_step_rhs(state, l_n)

    def update_B(self, state, E_new):
        return update_B(state, E_new)

    def advance(self, state, l_n=None):
        self._check_state(state)
        state, result = advance(state, l_n, self.potential, self.config,
                                self.coeffs.eta, self.A, self.factor)
        self.results.append(result)
        return state

    def run(self, state, source=None, n_steps=1, callback=None):
        """Advance ``n_steps`` times; ``source(t, x, y)`` is evaluated at the
        new time t^n of each step. ``callback(n, state)`` is called after
        every step."""
        for n in range(1, n_steps + 1):
            t_new = state.t + self.k
            l_n = None if source is None else partial(source, t_new)
            state = self.advance(state, l_n)
            if callback is not None:
                callback(n, state)
        return state
