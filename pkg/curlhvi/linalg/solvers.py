"""
Symmetric positive definite solvers: Jacobi preconditioned conjugate
gradients and a sparse symmetric factorization reused across solves.
"""
from __future__ import absolute_import, division, print_function

import logging
from collections import namedtuple

import numpy as np
import scipy.sparse as sps
from scipy.sparse.linalg import splu

from ..core.config import get_option
from ..core.utils import SPDError, SolverError, UsageError

try:
    from sksparse.cholmod import cholesky as _cholmod_cholesky
    from sksparse.cholmod import CholmodNotPositiveDefiniteError
except ImportError:  # pragma no cover
    _cholmod_cholesky = None
    CholmodNotPositiveDefiniteError = None

logger = logging.getLogger(__name__)

__all__ = ['SolveStats', 'CholeskyFactor', 'cg_solve', 'cholesky_factor',
           'solve_with_factor', 'symmetry_error', 'probe_spd']

SolveStats = namedtuple('SolveStats', ['iterations', 'residual', 'converged'])


def _as_operator(A):
    if sps.issparse(A):
        return A.tocsr()
    return np.asarray(A, dtype=float)


def symmetry_error(A):
    "max |A - A^T| / max |A|."
    A = sps.csr_matrix(A)
    scale = abs(A).max() if A.nnz else 0.0
    if scale == 0:
        return 0.0
    diff = (A - A.T).tocsr()
    return (abs(diff).max() if diff.nnz else 0.0) / scale


def cg_solve(A, rhs, x0=None, rel_tol=None, max_iter=None,
             preconditioner='jacobi', raise_on_failure=False):
    """Conjugate gradients for a symmetric matrix.

    Stops when ||A x - rhs|| <= rel_tol ||rhs||. A non-positive curvature
    p^T A p <= 0 means A is not positive definite and raises SPDError.

    Returns
    -------
    x : ndarray
    stats : SolveStats
    """
    if rel_tol is None:
        rel_tol = get_option('linalg.cg_rel_tol')
    if max_iter is None:
        max_iter = get_option('linalg.cg_max_iter')
    if not 0 < rel_tol < 1:
        raise UsageError('rel_tol must lie in (0, 1): %s' % rel_tol)
    A = _as_operator(A)
    rhs = np.asarray(rhs, dtype=float)
    n = rhs.shape[0]
    if A.shape != (n, n):
        raise UsageError('Matrix of shape %s with a right-hand side of '
                         'length %d' % (A.shape, n))
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=float)
    rhs_norm = np.linalg.norm(rhs)
    if rhs_norm == 0:
        return np.zeros(n), SolveStats(0, 0.0, True)
    if preconditioner == 'jacobi':
        diag = A.diagonal() if sps.issparse(A) else np.diag(A).copy()
        if np.any(diag <= 0):
            raise SPDError('Non-positive diagonal entry, the matrix is not '
                           'positive definite')
        inv_diag = 1.0 / diag
    elif preconditioner is None:
        inv_diag = np.ones(n)
    else:
        raise UsageError('Unknown preconditioner %r' % (preconditioner,))
    r = rhs - A.dot(x)
    res = np.linalg.norm(r) / rhs_norm
    z = inv_diag * r
    p = z.copy()
    rz = np.dot(r, z)
    it = 0
    while res > rel_tol and it < max_iter:
        Ap = A.dot(p)
        curvature = np.dot(p, Ap)
        if curvature <= 0:
            raise SPDError('Negative curvature p^T A p = %g at CG iteration '
                           '%d, the matrix is not positive definite'
                           % (curvature, it))
        step = rz / curvature
        x += step * p
        r -= step * Ap
        it += 1
        res = np.linalg.norm(r) / rhs_norm
        z = inv_diag * r
        rz_new = np.dot(r, z)
        p = z + (rz_new / rz) * p
        rz = rz_new
        if it % 100 == 0:
            logger.debug('CG iteration %d: relative residual %g', it, res)
    # guard against drift of the recursive residual
    res = np.linalg.norm(rhs - A.dot(x)) / rhs_norm
    converged = bool(res <= rel_tol)
    if not converged:
        logger.warning('CG stopped after %d iterations at relative residual '
                       '%g', it, res)
        if raise_on_failure:
            raise SolverError('CG did not converge in %d iterations' % it)
    return x, SolveStats(it, res, converged)


class CholeskyFactor(object):
    """Factorization of a symmetric positive definite sparse matrix.

    Uses CHOLMOD when scikit-sparse is installed. Otherwise SuperLU runs
    with a symmetric fill-reducing ordering, no equilibration and diagonal
    pivots only, which yields the LDL^T factorization of the permuted
    matrix; positive pivots certify positive definiteness.
    """
    def __init__(self, A):
        A = sps.csc_matrix(A, dtype=float)
        if A.shape[0] != A.shape[1]:
            raise UsageError('Cannot factor a non-square matrix')
        self.shape = A.shape
        self.backend = None
        if A.shape[0] == 0:
            self.backend = 'empty'
            self.pivots = np.zeros(0)
            return
        if _cholmod_cholesky is not None:
            try:
                self._factor = _cholmod_cholesky(A)
            except CholmodNotPositiveDefiniteError as exc:
                raise SPDError('Cholesky factorization failed: %s' % exc)
            self.backend = 'cholmod'
            self.pivots = self._factor.D()
        else:
            try:
                lu = splu(A, permc_spec='MMD_AT_PLUS_A',
                          diag_pivot_thresh=0.0,
                          options=dict(SymmetricMode=True, Equil=False))
            except RuntimeError as exc:
                raise SPDError('Factorization failed, the matrix is singular:'
                               ' %s' % exc)
            if not np.array_equal(lu.perm_r, lu.perm_c):
                raise SPDError('Off-diagonal pivoting was needed, the matrix '
                               'is not positive definite')
            self._factor = lu
            self.backend = 'superlu'
            self.pivots = lu.U.diagonal()
        if np.any(self.pivots <= 0):
            raise SPDError('Non-positive pivot %g, the matrix is not positive '
                           'definite' % self.pivots.min())
        logger.info('Factored %d x %d matrix with %s', self.shape[0],
                    self.shape[1], self.backend)

    def solve(self, rhs):
        rhs = np.asarray(rhs, dtype=float)
        if rhs.shape[0] != self.shape[0]:
            raise UsageError('Right-hand side of length %d for a %d x %d '
                             'factor' % (rhs.shape[0], self.shape[0],
                                         self.shape[1]))
        if self.backend == 'empty':
            return np.zeros_like(rhs)
        if self.backend == 'cholmod':
            return self._factor(rhs)
        return self._factor.solve(rhs)

    __call__ = solve


def cholesky_factor(A):
    return CholeskyFactor(A)


def solve_with_factor(factor, rhs):
    return factor.solve(rhs)


def probe_spd(A, iterations=50, seed=0):
    """Run a few unpreconditioned CG steps on a random right-hand side;
    raises SPDError on negative curvature."""
    rng = np.random.RandomState(seed)
    rhs = rng.standard_normal(A.shape[0])
    cg_solve(A, rhs, rel_tol=1e-14, max_iter=iterations, preconditioner=None)
    return True
