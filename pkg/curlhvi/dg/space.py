"""
Broken polynomial spaces on triangles: bases, traces, tangential jumps and
averages.

Degrees of freedom are stored element by element; inside an element
block the ordering is node-major, component-minor, so that the coefficient
of node ``i`` and component ``c`` in element ``k`` sits at
``k * dofs_per_element + i * components + c``.
"""
from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..core.config import get_option
from ..core.utils import (HVIError, DomainError, UsageError, is_int,
                          as_vector_values, as_scalar_values)
from ..mesh.mesh2d import BOUNDARY
from .quadrature import triangle_rule, edge_rule

logger = logging.getLogger(__name__)

__all__ = ['DGSpace', 'DoFVector', 'lagrange_basis', 'eval_basis',
           'eval_field', 'tangential_jump', 'scalar_tangential_jump',
           'average', 'cross', 'l2_project', 'SUPPORTED_DEGREES']

SUPPORTED_DEGREES = (1, 2)

_GRAD_LAMBDA = np.array([[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]])
_P2_EDGES = ((0, 1), (1, 2), (2, 0))
# reference coordinates of the interpolation nodes
_NODES = {1: np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]),
          2: np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0],
                       [0.5, 0.0], [0.5, 0.5], [0.0, 0.5]])}


def lagrange_basis(degree, points):
    """Nodal Lagrange basis on the reference triangle.

    Returns ``(values, grads)`` with shapes ``points.shape[:-1] + (nb,)``
    and ``points.shape[:-1] + (nb, 2)``; gradients are taken with respect
    to the reference coordinates.
    """
    points = np.asarray(points, dtype=float)
    r = points[..., 0]
    s = points[..., 1]
    lam = np.stack([1.0 - r - s, r, s], axis=-1)
    shape = lam.shape[:-1]
    if degree == 1:
        grads = np.broadcast_to(_GRAD_LAMBDA, shape + (3, 2)).copy()
        return lam, grads
    if degree == 2:
        values = np.empty(shape + (6,))
        grads = np.empty(shape + (6, 2))
        for i in range(3):
            values[..., i] = lam[..., i] * (2.0 * lam[..., i] - 1.0)
            grads[..., i, :] = ((4.0 * lam[..., i] - 1.0)[..., None]
                                * _GRAD_LAMBDA[i])
        for e, (i, j) in enumerate(_P2_EDGES):
            values[..., 3 + e] = 4.0 * lam[..., i] * lam[..., j]
            grads[..., 3 + e, :] = 4.0 * (lam[..., i][..., None] * _GRAD_LAMBDA[j]
                                          + lam[..., j][..., None] * _GRAD_LAMBDA[i])
        return values, grads
    raise HVIError('Unsupported polynomial degree %r, expected one of %s'
                   % (degree, SUPPORTED_DEGREES))


def cross(normal, v):
    "Scalar cross product n x v = n_x v_y - n_y v_x (broadcasting)."
    normal = np.asarray(normal, dtype=float)
    v = np.asarray(v, dtype=float)
    return normal[..., 0] * v[..., 1] - normal[..., 1] * v[..., 0]


class DGSpace(object):
    """Broken space of (vector or scalar) polynomials of degree ``degree``
    on a :class:`~curlhvi.mesh.Mesh2D`; no continuity between elements.
    """
    def __init__(self, mesh, degree=None, components=2):
        if degree is None:
            degree = get_option('dg.degree')
        if degree not in SUPPORTED_DEGREES:
            raise HVIError('Unsupported polynomial degree %r, expected one '
                           'of %s' % (degree, SUPPORTED_DEGREES))
        if components not in (1, 2):
            raise UsageError('components must be 1 or 2, got %r'
                             % (components,))
        self.mesh = mesh
        self.degree = degree
        self.components = components
        self.n_basis = (degree + 1) * (degree + 2) // 2
        self.dofs_per_element = components * self.n_basis
        self.n_elements = len(mesh)
        self.n_dofs = self.dofs_per_element * self.n_elements
        self.offsets = np.arange(self.n_elements) * self.dofs_per_element
        corners = mesh.corners()
        self.origins = corners[:, 0]
        self.jacobians = np.stack([corners[:, 1] - corners[:, 0],
                                   corners[:, 2] - corners[:, 0]], axis=2)
        self.dets = np.linalg.det(self.jacobians) if self.n_elements \
            else np.zeros(0)
        self.inv_jacobians = np.linalg.inv(self.jacobians) \
            if self.n_elements else np.zeros((0, 2, 2))
        self.quadrature = triangle_rule()
        self.edge_quadrature = edge_rule()
        self._quad_cache = None
        self._face_cache = {}
        logger.debug('DGSpace degree %d, %d components: %d dofs',
                     degree, components, self.n_dofs)

    def __len__(self):
        return self.n_dofs

    def same_layout(self, other):
        "True when both spaces number the dofs of the same mesh alike."
        if other is self:
            return True
        return (self.degree == other.degree
                and self.components == other.components
                and (other.mesh is self.mesh
                     or (np.array_equal(self.mesh.vertices,
                                        other.mesh.vertices)
                         and np.array_equal(self.mesh.triangles,
                                            other.mesh.triangles))))

    def dof_indices(self, elements=None):
        "Global dof indices, ``(n, dofs_per_element)``."
        if elements is None:
            elements = np.arange(self.n_elements)
        return (np.asarray(elements)[..., None] * self.dofs_per_element
                + np.arange(self.dofs_per_element))

    def nodes(self):
        "Reference coordinates of the interpolation nodes."
        return _NODES[self.degree]

    def zeros(self):
        return DoFVector(self)

    # geometry

    def to_reference(self, elements, points):
        elements = np.asarray(elements)
        d = np.asarray(points, dtype=float) - self.origins[elements]
        return np.einsum('...ab,...b->...a', self.inv_jacobians[elements], d)

    def to_physical(self, elements, ref_points):
        elements = np.asarray(elements)
        return self.origins[elements] + np.einsum(
            '...ab,...b->...a', self.jacobians[elements],
            np.asarray(ref_points, dtype=float))

    # basis

    def _expand(self, scalar):
        "Scalar basis values ``(..., nb)`` to vector basis ``(..., nd, comps)``."
        comps = self.components
        out = np.zeros(scalar.shape[:-1] + (self.n_basis, comps, comps))
        for c in range(comps):
            out[..., c, c] = scalar
        return out.reshape(scalar.shape[:-1] + (self.dofs_per_element, comps))

    def _physical_grads(self, elements, ref_grads):
        "Reference gradients ``(..., nb, 2)`` mapped by J^{-T} of elements."
        inv = self.inv_jacobians[np.asarray(elements)]
        return np.einsum('...ba,...ib->...ia', inv, ref_grads)

    def _curls(self, grads):
        """Curl of each basis function given physical scalar gradients
        ``(..., nb, 2)``.

        Vector space: the scalar curl ``(..., nd)``. Scalar space: the
        rotated gradient ``(..., nd, 2)``.
        """
        if self.components == 2:
            out = np.empty(grads.shape[:-1] + (2,))
            out[..., 0] = -grads[..., 1]
            out[..., 1] = grads[..., 0]
            return out.reshape(grads.shape[:-2] + (self.dofs_per_element,))
        return np.stack([grads[..., 1], -grads[..., 0]], axis=-1)

    def basis_at(self, elements, ref_points):
        """Vectorized basis evaluation: basis values ``(..., nd, comps)``
        and curls at reference points of the given elements."""
        values, ref_grads = lagrange_basis(self.degree, ref_points)
        grads = self._physical_grads(elements, ref_grads)
        return self._expand(values), self._curls(grads)

    def element_coefficients(self, dofs):
        values = _values_of(dofs, self)
        return values.reshape(self.n_elements, self.n_basis, self.components)

    def evaluate(self, dofs, elements, ref_points):
        "Field values ``(..., comps)`` at reference points of elements."
        coefs = self.element_coefficients(dofs)[np.asarray(elements)]
        values, _ = lagrange_basis(self.degree, ref_points)
        return np.einsum('...i,...ic->...c', values, coefs)

    def evaluate_curl(self, dofs, elements, ref_points):
        "Broken curl at reference points (scalar, or rotated gradient)."
        elements = np.asarray(elements)
        coefs = self.element_coefficients(dofs)[elements]
        _, ref_grads = lagrange_basis(self.degree, ref_points)
        grads = self._physical_grads(elements, ref_grads)
        if self.components == 2:
            # d/dx of E_y minus d/dy of E_x
            return (np.einsum('...i,...i->...', grads[..., 0], coefs[..., 1])
                    - np.einsum('...i,...i->...', grads[..., 1], coefs[..., 0]))
        dx = np.einsum('...i,...i->...', grads[..., 0], coefs[..., 0])
        dy = np.einsum('...i,...i->...', grads[..., 1], coefs[..., 0])
        return np.stack([dy, -dx], axis=-1)

    def evaluate_at_points(self, dofs, points):
        "Evaluate at physical points, located by structured index arithmetic."
        points = np.asarray(points, dtype=float)
        elements = self.mesh.locate(points)
        return self.evaluate(dofs, elements, self.to_reference(elements, points))

    def evaluate_curl_at_points(self, dofs, points):
        points = np.asarray(points, dtype=float)
        elements = self.mesh.locate(points)
        return self.evaluate_curl(dofs, elements,
                                  self.to_reference(elements, points))

    # element quadrature

    def _quad(self):
        if self._quad_cache is None:
            rule = self.quadrature
            elements = np.arange(self.n_elements)[:, None]
            ref = np.broadcast_to(rule.points, (self.n_elements,)
                                  + rule.points.shape)
            values, ref_grads = lagrange_basis(self.degree, rule.points)
            grads = self._physical_grads(elements, ref_grads[None])
            self._quad_cache = dict(
                points=self.to_physical(elements, ref),
                weights=rule.weights[None, :] * np.abs(self.dets)[:, None],
                scalar=values,
                basis=self._expand(values),
                curls=self._curls(grads))
        return self._quad_cache

    def quadrature_points(self):
        "Physical quadrature points ``(ne, nq, 2)``."
        return self._quad()['points']

    def quadrature_weights(self):
        "Physical quadrature weights ``(ne, nq)``."
        return self._quad()['weights']

    def quadrature_basis(self):
        """Basis values ``(nq, nd, comps)`` (the same in every element) and
        curls ``(ne, nq, nd[, 2])``."""
        q = self._quad()
        return q['basis'], q['curls']

    def quadrature_values(self, dofs):
        "Field values at all quadrature points, ``(ne, nq, comps)``."
        coefs = self.element_coefficients(dofs)
        return np.einsum('qi,kic->kqc', self._quad()['scalar'], coefs)

    def quadrature_curls(self, dofs):
        values = _values_of(dofs, self).reshape(self.n_elements,
                                                 self.dofs_per_element)
        curls = self._quad()['curls']
        if self.components == 2:
            return np.einsum('kqd,kd->kq', curls, values)
        return np.einsum('kqdc,kd->kqc', curls, values)

    def integrate(self, values):
        "Integral over the domain of quadrature samples ``(ne, nq[, ...])``."
        w = self.quadrature_weights()
        values = np.asarray(values, dtype=float)
        return np.tensordot(w, values, axes=([0, 1], [0, 1]))

    def norm_l2(self, dofs):
        return float(np.sqrt(self.integrate(
            (self.quadrature_values(dofs) ** 2).sum(axis=-1))))

    def integrate_against_basis(self, samples):
        """Vector ``b_i = int samples . phi_i`` from samples on the element
        quadrature, ``(ne, nq, comps)``."""
        samples = np.asarray(samples, dtype=float)
        shape = (self.n_elements, len(self.quadrature), self.components)
        if samples.shape != shape:
            raise UsageError('Expected quadrature samples of shape %s, got %s'
                             % (shape, samples.shape))
        q = self._quad()
        weighted = samples * q['weights'][..., None]
        local = np.einsum('kqc,qi->kic', weighted, q['scalar'])
        return local.reshape(-1)

    def local_mass(self):
        "Scalar local mass matrices ``(ne, nb, nb)``."
        q = self._quad()
        return np.einsum('kq,qi,qj->kij', q['weights'], q['scalar'],
                         q['scalar'])

    def project_samples(self, samples):
        "Element-wise L2 projection of quadrature samples."
        samples = np.asarray(samples, dtype=float)
        q = self._quad()
        rhs = np.einsum('kqc,kq,qi->kic', samples, q['weights'], q['scalar'])
        try:
            coefs = np.linalg.solve(self.local_mass(), rhs)
        except np.linalg.LinAlgError:
            raise HVIError('Singular local mass matrix')
        return DoFVector(self, coefs.reshape(-1))

    # faces

    def _face(self, side):
        if side in self._face_cache:
            return self._face_cache[side]
        fa = self.mesh.faces
        rule = self.edge_quadrature
        t = rule.points
        points = (fa.starts[:, None, :] * (1.0 - t)[None, :, None]
                  + fa.ends[:, None, :] * t[None, :, None])
        if side == 'left':
            elements = fa.left
        elif side == 'right':
            elements = np.where(fa.right < 0, fa.left, fa.right)
        else:
            raise UsageError('side must be left or right: %r' % (side,))
        ref = self.to_reference(elements[:, None], points)
        values, curls = self.basis_at(elements[:, None], ref)
        cache = dict(points=points, ref=ref, elements=elements,
                     weights=rule.weights[None, :] * fa.lengths[:, None],
                     basis=values, curls=curls)
        self._face_cache[side] = cache
        return cache

    def face_quadrature(self):
        "Face quadrature points ``(nf, ng, 2)`` and weights ``(nf, ng)``."
        cache = self._face('left')
        return cache['points'], cache['weights']

    def face_basis(self, side):
        """Basis values ``(nf, ng, nd, comps)``, curls and element indices of
        one side of every face. On boundary faces the right side repeats the
        left element; callers mask it with ``mesh.faces.is_boundary``."""
        cache = self._face(side)
        return cache['basis'], cache['curls'], cache['elements']

    def face_traces(self, dofs, side):
        "Traces ``(nf, ng, comps)`` of a field on one side of every face."
        cache = self._face(side)
        return self.evaluate(dofs, cache['elements'][:, None], cache['ref'])

    def face_curl_traces(self, dofs, side):
        cache = self._face(side)
        return self.evaluate_curl(dofs, cache['elements'][:, None],
                                  cache['ref'])

    def __repr__(self):
        return '<DGSpace degree=%d components=%d dofs=%d>' % (
            self.degree, self.components, self.n_dofs)


class DoFVector(object):
    "Coefficients of a field of a :class:`DGSpace`."
    def __init__(self, space, values=None):
        self.space = space
        if values is None:
            values = np.zeros(space.n_dofs)
        values = np.asarray(values, dtype=float)
        if values.shape != (space.n_dofs,):
            raise UsageError('DoFVector length %s does not match the %d dofs '
                             'of the space' % (values.shape, space.n_dofs))
        self.values = values

    def __len__(self):
        return len(self.values)

    def copy(self):
        return DoFVector(self.space, self.values.copy())

    def _other(self, other):
        if isinstance(other, DoFVector):
            if not self.space.same_layout(other.space):
                raise UsageError('DoFVectors of different spaces')
            return other.values
        return other

    def __add__(self, other):
        return DoFVector(self.space, self.values + self._other(other))

    def __sub__(self, other):
        return DoFVector(self.space, self.values - self._other(other))

    def __mul__(self, scalar):
        return DoFVector(self.space, self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return DoFVector(self.space, -self.values)

    def norm_l2(self):
        return self.space.norm_l2(self)

    def __repr__(self):
        return '<DoFVector %d dofs>' % len(self.values)


def _values_of(dofs, space):
    if isinstance(dofs, DoFVector):
        values = dofs.values
    else:
        values = np.asarray(dofs, dtype=float)
    if values.shape != (space.n_dofs,):
        raise UsageError('Coefficient vector of length %s, the space has %d '
                         'dofs' % (values.shape, space.n_dofs))
    return values


def _check_element(space, element):
    if not is_int(element) or element < 0 or element >= space.n_elements:
        raise DomainError('Invalid element index %r' % (element,))


def _check_reference_point(ref_point, tol=1e-12):
    ref_point = np.asarray(ref_point, dtype=float)
    if ref_point.shape != (2,):
        raise UsageError('Reference point must be a 2-vector')
    r, s = ref_point
    if r < -tol or s < -tol or r + s > 1.0 + tol:
        raise DomainError('Point %s outside the reference triangle'
                          % (ref_point,))
    return ref_point


def eval_basis(space, element, ref_point):
    """Basis values ``(nd, comps)`` and curls of one element at a point of
    the reference triangle."""
    _check_element(space, element)
    ref_point = _check_reference_point(ref_point)
    return space.basis_at(element, ref_point)


def eval_field(space, dofs, element, ref_point):
    _check_element(space, element)
    ref_point = _check_reference_point(ref_point)
    return space.evaluate(dofs, element, ref_point)


def _check_traces(face, trace_right):
    kind = getattr(face, 'kind', None)
    if kind == BOUNDARY and trace_right is not None:
        raise UsageError('A boundary face has a single trace')
    if kind != BOUNDARY and trace_right is None:
        raise UsageError('An interior face needs both traces')


def tangential_jump(face, trace_left, trace_right=None):
    """Tangential jump of a vector field across a face: n1 x v1 + n2 x v2
    with n2 = -n1 on interior faces, n x v on boundary faces."""
    _check_traces(face, trace_right)
    if trace_right is None:
        return cross(face.normal, trace_left)
    return cross(face.normal, np.asarray(trace_left, dtype=float)
                 - np.asarray(trace_right, dtype=float))


def scalar_tangential_jump(face, q_left, q_right=None):
    """Tangential jump of an out-of-plane scalar field q e_z: the in-plane
    2-vector n1 x q1 + n2 x q2."""
    _check_traces(face, q_right)
    q = np.asarray(q_left, dtype=float)
    if q_right is not None:
        q = q - np.asarray(q_right, dtype=float)
    n = np.asarray(face.normal, dtype=float)
    return np.stack([n[1] * q, -n[0] * q], axis=-1)


def average(face, trace_left, trace_right=None):
    _check_traces(face, trace_right)
    if trace_right is None:
        return np.asarray(trace_left, dtype=float)
    return 0.5 * (np.asarray(trace_left, dtype=float)
                  + np.asarray(trace_right, dtype=float))


def l2_project(space, analytic_field):
    """Element-wise L2 projection of ``analytic_field(x, y)`` with the
    degree 4 triangle rule."""
    points = space.quadrature_points()
    if space.components == 2:
        samples = as_vector_values(analytic_field, points[..., 0],
                                   points[..., 1])
    else:
        samples = as_scalar_values(analytic_field, points[..., 0],
                                   points[..., 1])[..., None]
    return space.project_samples(samples)
