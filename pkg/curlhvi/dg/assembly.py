"""
Assembly of the symmetric interior penalty bilinear form for the
curl-curl operator, of load functionals and of the multiplier term.

For u, v in the broken vector space::

    a_h(u, v) = int eps u.v + int mu^-1 curl_h u curl_h v
                - sum_f int [[u]] {mu^-1 curl_h v}
                - sum_f int [[v]] {mu^-1 curl_h u}
                + sum_f int alpha [[u]] [[v]],      alpha = eta / h_f

where the sums run over all faces, boundary faces using [[v]] = n x v and
{v} = v. The assembled matrix A satisfies a_h(u, v) = v^T A u.
"""
from __future__ import absolute_import, division, print_function

import logging

import numpy as np
from scipy.sparse import coo_matrix

from ..core.utils import UsageError, as_vector_values
from ..mesh.mesh2d import ProblemCoefficients
from .space import DGSpace, DoFVector, cross

logger = logging.getLogger(__name__)

__all__ = ['LoadFunctional', 'assemble_bilinear', 'assemble_mass',
           'assemble_curl_curl', 'assemble_consistency', 'assemble_penalty',
           'assemble_energy_matrix', 'assemble_load',
           'assemble_subgradient_load', 'assemble_samples_load']


class LoadFunctional(object):
    "A linear functional <f, v> = values . v on a DG space."
    def __init__(self, space, values=None):
        self.space = space
        if values is None:
            values = np.zeros(space.n_dofs)
        values = np.asarray(values, dtype=float)
        if values.shape != (space.n_dofs,):
            raise UsageError('Load of length %s for a space of %d dofs'
                             % (values.shape, space.n_dofs))
        self.values = values

    def __len__(self):
        return len(self.values)

    def __call__(self, v):
        if isinstance(v, DoFVector):
            v = v.values
        return float(np.dot(self.values, v))

    def _other(self, other):
        if isinstance(other, LoadFunctional):
            return other.values
        return np.asarray(other, dtype=float)

    def __add__(self, other):
        return LoadFunctional(self.space, self.values + self._other(other))

    def __sub__(self, other):
        return LoadFunctional(self.space, self.values - self._other(other))

    def __mul__(self, scalar):
        return LoadFunctional(self.space, self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return LoadFunctional(self.space, -self.values)

    def __repr__(self):
        return '<LoadFunctional %d dofs>' % len(self.values)


def _check_vector_space(space):
    if not isinstance(space, DGSpace) or space.components != 2:
        raise UsageError('The curl-curl form needs a vector DG space')


def _to_csr(space, rows, cols, values):
    n = space.n_dofs
    mat = coo_matrix((values.ravel(), (rows.ravel(), cols.ravel())),
                     shape=(n, n)).tocsr()
    mat.sum_duplicates()
    mat.sort_indices()
    return mat


def _element_matrix(space, local):
    "Scatter element blocks ``(ne, nd, nd)``."
    dofs = space.dof_indices()
    rows = np.broadcast_to(dofs[:, :, None], local.shape)
    cols = np.broadcast_to(dofs[:, None, :], local.shape)
    return _to_csr(space, rows, cols, local)


def assemble_mass(space, epsilon=1.0):
    "Matrix of int epsilon u.v."
    basis, _ = space.quadrature_basis()
    w = space.quadrature_weights()
    local = epsilon * np.einsum('kq,qac,qbc->kab', w, basis, basis)
    return _element_matrix(space, local)


def assemble_curl_curl(space, inv_mu=1.0):
    "Matrix of int mu^-1 curl_h u curl_h v."
    _check_vector_space(space)
    _, curls = space.quadrature_basis()
    w = space.quadrature_weights()
    local = inv_mu * np.einsum('kq,kqa,kqb->kab', w, curls, curls)
    return _element_matrix(space, local)


def _face_operators(space):
    """Jump and average coefficients of every basis function at the face
    quadrature points, stacked left then right: ``(nf, ng, 2 nd)`` each,
    together with the global dofs ``(nf, 2 nd)``."""
    faces = space.mesh.faces
    boundary = faces.is_boundary
    basis_l, curls_l, elem_l = space.face_basis('left')
    basis_r, curls_r, elem_r = space.face_basis('right')
    normals = faces.normals[:, None, None, :]
    jump_l = cross(normals, basis_l)
    jump_r = -cross(normals, basis_r)
    half = np.where(boundary, 1.0, 0.5)[:, None, None]
    avg_l = half * curls_l
    avg_r = half * curls_r
    jump_r[boundary] = 0.0
    avg_r[boundary] = 0.0
    jumps = np.concatenate([jump_l, jump_r], axis=2)
    averages = np.concatenate([avg_l, avg_r], axis=2)
    dofs = np.concatenate([space.dof_indices(elem_l),
                           space.dof_indices(elem_r)], axis=1)
    return jumps, averages, dofs


def _face_matrix(space, local):
    "Scatter face blocks ``(nf, 2 nd, 2 nd)``; boundary faces keep one side."
    _, _, dofs = _face_operators(space)
    nd = space.dofs_per_element
    rows = np.broadcast_to(dofs[:, :, None], local.shape)
    cols = np.broadcast_to(dofs[:, None, :], local.shape)
    side = np.arange(2 * nd) >= nd
    outside = side[:, None] | side[None, :]
    keep = ~(space.mesh.faces.is_boundary[:, None, None] & outside[None])
    return _to_csr(space, rows[keep], cols[keep], local[keep])


def assemble_consistency(space, inv_mu=1.0):
    "Matrix of the two symmetric flux terms (with their minus signs)."
    _check_vector_space(space)
    jumps, averages, _ = _face_operators(space)
    _, w = space.face_quadrature()
    cross_terms = np.einsum('fg,fga,fgb->fab', w, averages, jumps)
    local = -inv_mu * (cross_terms + cross_terms.transpose(0, 2, 1))
    return _face_matrix(space, local)


def assemble_penalty(space, eta):
    "Matrix of sum_f int (eta / h_f) [[u]] [[v]]."
    _check_vector_space(space)
    jumps, _, _ = _face_operators(space)
    _, w = space.face_quadrature()
    alpha = eta / space.mesh.faces.h_f
    local = np.einsum('f,fg,fga,fgb->fab', alpha, w, jumps, jumps)
    return _face_matrix(space, local)


def assemble_bilinear(space, coeffs=None):
    """Assemble the IPDG matrix A with a_h(u, v) = v^T A u.

    Parameters
    ----------
    space : DGSpace
        vector DG space
    coeffs : ProblemCoefficients
        epsilon, mu and the penalty constant eta (registry defaults if None)
    """
    _check_vector_space(space)
    if coeffs is None:
        coeffs = ProblemCoefficients()
    inv_mu = 1.0 / coeffs.mu
    mat = (assemble_mass(space, coeffs.epsilon)
           + assemble_curl_curl(space, inv_mu)
           + assemble_consistency(space, inv_mu)
           + assemble_penalty(space, coeffs.eta)).tocsr()
    mat.sum_duplicates()
    mat.sort_indices()
    logger.info('Assembled IPDG matrix: %d dofs, %d nonzeros (%r)',
                mat.shape[0], mat.nnz, coeffs)
    return mat


def assemble_energy_matrix(space, eta):
    "Matrix N with ||v||_h^2 = v^T N v (L2, broken curl and jump terms)."
    mat = (assemble_mass(space) + assemble_curl_curl(space)
           + assemble_penalty(space, eta)).tocsr()
    mat.sort_indices()
    return mat


def assemble_samples_load(space, samples):
    "Load ``int g . phi_i`` from samples of g on the element quadrature."
    return LoadFunctional(space, space.integrate_against_basis(samples))


def assemble_load(space, source):
    "Load functional <f, v> of a source callable ``source(x, y)``."
    _check_vector_space(space)
    points = space.quadrature_points()
    samples = as_vector_values(source, points[..., 0], points[..., 1])
    return assemble_samples_load(space, samples)


def assemble_subgradient_load(space, lambda_at_quadrature):
    "Load ``int lambda . phi_i`` of multiplier samples ``(ne, nq, 2)``."
    _check_vector_space(space)
    return assemble_samples_load(space, lambda_at_quadrature)
