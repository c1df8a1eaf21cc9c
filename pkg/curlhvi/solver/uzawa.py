"""
Uzawa iteration for the discrete hemivariational inequality

    a_h(E, v - E) + int psi0(E; v - E) >= <f, v - E>    for all v

and the energy functional whose minimizer it computes.

The multiplier of each step is lagged: at every quadrature point
lambda^l = omega(|E^{l-1}|) E^{l-1} / |E^{l-1}| (0 where |E^{l-1}| is
below the potential's tol_zero), so that each step is a linear solve with
the same matrix A. A is factored once.
"""
from __future__ import absolute_import, division, print_function

import logging
from collections import namedtuple

import numpy as np
import pandas as pd

from ..core.config import get_option
from ..core.utils import ConfigurationError, SPDError, UsageError, is_int
from ..dg.assembly import LoadFunctional, assemble_subgradient_load
from ..dg.space import DoFVector
from ..linalg.solvers import cholesky_factor

logger = logging.getLogger(__name__)

__all__ = ['UzawaConfig', 'UzawaResult', 'IterationRecord', 'uzawa_solve',
           'energy_functional', 'hvi_residual', 'factor_or_fail']

# denominators below this skip the relative change test of lambda
LAMBDA_FLOOR = 1e-30

IterationRecord = namedtuple('IterationRecord',
                             ['iter', 'rel_dE', 'rel_dlambda', 'energy'])


class UzawaConfig(object):
    """Stopping parameters of the Uzawa iteration.

    ``relaxation`` in (0, 1] damps the multiplier update,
    lambda^l = r lambda(E^{l-1}) + (1 - r) lambda^{l-1}; 1 is the plain
    iteration.
    """
    def __init__(self, eps_stop=None, l_max=None, relaxation=1.0):
        if eps_stop is None:
            eps_stop = get_option('uzawa.eps')
        if l_max is None:
            l_max = get_option('uzawa.max_iters')
        try:
            eps_stop = float(eps_stop)
        except (TypeError, ValueError):
            raise ConfigurationError('eps_stop must be a number: %r'
                                     % (eps_stop,))
        if not eps_stop > 0:
            raise ConfigurationError('eps_stop must be positive: %s'
                                     % eps_stop)
        if not is_int(l_max) or l_max < 1:
            raise ConfigurationError('l_max must be an integer >= 1: %r'
                                     % (l_max,))
        relaxation = float(relaxation)
        if not 0 < relaxation <= 1:
            raise ConfigurationError('relaxation must lie in (0, 1]: %s'
                                     % relaxation)
        self.eps_stop = eps_stop
        self.l_max = int(l_max)
        self.relaxation = relaxation

    def __repr__(self):
        return 'UzawaConfig(eps_stop=%g, l_max=%d, relaxation=%g)' % (
            self.eps_stop, self.l_max, self.relaxation)


class UzawaResult(object):
    "Output of :func:`uzawa_solve`."
    def __init__(self, E, lam, iterations, converged, history):
        self.E = E
        self.lam = lam
        self.iterations = iterations
        self.converged = converged
        self.history = history

    @property
    def lambda_(self):
        return self.lam

    def history_frame(self):
        "The iteration log as a DataFrame ``iter,rel_dE,rel_dlambda,energy``."
        return pd.DataFrame(self.history, columns=IterationRecord._fields)

    def __repr__(self):
        return '<UzawaResult iterations=%d converged=%s>' % (
            self.iterations, self.converged)


def _load_values(f, space):
    if isinstance(f, LoadFunctional):
        values = f.values
    else:
        values = np.asarray(f, dtype=float)
    if values.shape != (space.n_dofs,):
        raise UsageError('Load of length %s for a space of %d dofs'
                         % (values.shape, space.n_dofs))
    return values


def _dof_values(v, space):
    if isinstance(v, DoFVector):
        return v.values
    v = np.asarray(v, dtype=float)
    if v.shape != (space.n_dofs,):
        raise UsageError('Vector of length %s for a space of %d dofs'
                         % (v.shape, space.n_dofs))
    return v


def factor_or_fail(A, eta=None):
    """Factor A, turning a positive definiteness failure into a
    ConfigurationError naming the penalty constant."""
    try:
        return cholesky_factor(A)
    except SPDError as exc:
        if eta is None:
            eta = get_option('ipdg.eta')
        raise ConfigurationError('The IPDG matrix is not positive definite '
                                 'with eta=%g; increase the penalty constant '
                                 '(%s)' % (eta, exc))


def _relative(change, reference):
    if reference > 0:
        return change / reference
    return 0.0 if change == 0 else np.inf


def energy_functional(A, f, pot, space, v):
    """E(v) = 1/2 a_h(v, v) + int psi(v) - <f, v>."""
    v = _dof_values(v, space)
    f = _load_values(f, space)
    quadratic = 0.5 * float(np.dot(v, A.dot(v)))
    potential = float(space.integrate(pot.psi(space.quadrature_values(v))))
    return quadratic + potential - float(np.dot(f, v))


def hvi_residual(A, f, pot, space, E, sign=1.0):
    """Residual r(v) = a_h(E, v) + int psi0(E; v) - <f, v> at
    ``v = sign * phi_i`` for every basis function phi_i.

    A solution of the inequality has r >= 0 in every direction.
    """
    E = _dof_values(E, space)
    f = _load_values(f, space)
    linear = sign * (A.dot(E) - f)
    basis, _ = space.quadrature_basis()
    xi = space.quadrature_values(E)[:, :, None, :]
    directional = pot.psi0(xi, sign * basis[None])        # (ne, nq, nd)
    w = space.quadrature_weights()
    nonsmooth = np.einsum('kq,kqd->kd', w, directional).reshape(-1)
    return linear + nonsmooth


def uzawa_solve(A, f, pot, space, config=None, initial='linear',
                epsilon=None, eta=None, factor=None):
    """Run the Uzawa iteration.

    Parameters
    ----------
    A : sparse matrix
        the IPDG matrix of ``space``
    f : LoadFunctional
    pot : ExponentialDecayPotential
    space : DGSpace
    config : UzawaConfig
    initial : 'linear', 'zero' or DoFVector
        E^0; 'linear' solves A E^0 = f
    epsilon : float, optional
        when given, the smallness condition m < epsilon is checked
    eta : float, optional
        reported in the error raised when A is not positive definite
    factor : CholeskyFactor, optional
        a factorization of A to reuse

    Returns
    -------
    UzawaResult
    """
    if config is None:
        config = UzawaConfig()
    f = _load_values(f, space)
    if epsilon is not None:
        pot.check_smallness(epsilon)
    if factor is None:
        factor = factor_or_fail(A, eta)

    if isinstance(initial, DoFVector):
        E = _dof_values(initial, space).copy()
    elif initial == 'linear':
        E = factor.solve(f)
    elif initial == 'zero':
        E = np.zeros(space.n_dofs)
    else:
        raise UsageError("initial must be 'linear', 'zero' or a DoFVector: %r"
                         % (initial,))

    lam = np.zeros((space.n_elements, len(space.quadrature), 2))
    history = []
    converged = False
    it = 0
    r = config.relaxation
    eps = config.eps_stop
    E_norm = space.norm_l2(E)
    lam_norm = 0.0
    for it in range(1, config.l_max + 1):
        lam_new = pot.subgradient(space.quadrature_values(E))
        if r != 1.0:
            lam_new = r * lam_new + (1.0 - r) * lam
        G = assemble_subgradient_load(space, lam_new)
        E_new = factor.solve(f - G.values)

        dE = space.norm_l2(E_new - E)
        dlam = float(np.sqrt(space.integrate(((lam_new - lam) ** 2)
                                             .sum(axis=-1))))
        E_ok = dE <= eps * E_norm
        lam_ok = lam_norm < LAMBDA_FLOOR or dlam <= eps * lam_norm
        energy = energy_functional(A, f, pot, space, E_new)
        record = IterationRecord(it, _relative(dE, E_norm),
                                 _relative(dlam, lam_norm), energy)
        history.append(record)
        logger.debug('Uzawa iteration %d: rel_dE=%g rel_dlambda=%g '
                     'energy=%.12g', *record)

        E, lam = E_new, lam_new
        E_norm = space.norm_l2(E)
        lam_norm = float(np.sqrt(space.integrate((lam ** 2).sum(axis=-1))))
        if E_ok and lam_ok:
            converged = True
            break

    if converged:
        logger.info('Uzawa converged in %d iterations (%d dofs)', it,
                    space.n_dofs)
    else:
        logger.warning('Uzawa did not converge in %d iterations', it)
    return UzawaResult(DoFVector(space, E), lam, it, converged, history)
