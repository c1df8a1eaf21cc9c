"""
Error norms against analytic or nested discrete references, and
empirical orders of convergence.

A nested reference is a discrete solution on a finer structured mesh of
the same family. Errors are then integrated with the quadrature of the
fine mesh, where the coarse field is a polynomial on every fine element;
the coarse element holding a fine quadrature point is found by index
arithmetic.
"""
from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..core.utils import UsageError, as_vector_values, as_scalar_values
from ..dg.assembly import assemble_energy_matrix
from ..dg.space import DGSpace, DoFVector, cross

logger = logging.getLogger(__name__)

__all__ = ['AnalyticReference', 'DiscreteReference', 'E_LIN',
           'sinusoidal_source', 'l2_error', 'energy_error', 'energy_norm',
           'eoc']

# offset along the face normal that selects the fine element on either side
_NUDGE = 1e-9


class AnalyticReference(object):
    """A field ``field(x, y) -> (Ex, Ey)`` with its scalar curl
    ``curl(x, y)``."""
    def __init__(self, field, curl):
        self.field = field
        self.curl = curl

    def values(self, points):
        return as_vector_values(self.field, points[..., 0], points[..., 1])

    def curls(self, points):
        return as_scalar_values(self.curl, points[..., 0], points[..., 1])

    def __repr__(self):
        return '<AnalyticReference %s>' % getattr(self.field, '__name__',
                                                   self.field)


class DiscreteReference(object):
    "A discrete field on a (finer) structured mesh."
    def __init__(self, space, E):
        if isinstance(E, DoFVector):
            E = E.values
        E = np.asarray(E, dtype=float)
        if E.shape != (space.n_dofs,):
            raise UsageError('Reference of length %s for a space of %d dofs'
                             % (E.shape, space.n_dofs))
        self.space = space
        self.E = E

    @property
    def mesh(self):
        return self.space.mesh

    def __repr__(self):
        return '<DiscreteReference level=%s>' % self.mesh.level


def _e_lin(x, y):
    px, py = np.pi * x, np.pi * y
    return np.cos(px) * np.sin(py), -np.sin(px) * np.cos(py)


def _e_lin_curl(x, y):
    return -2.0 * np.pi * np.cos(np.pi * x) * np.cos(np.pi * y)

#: E = (cos(pi x) sin(pi y), -sin(pi x) cos(pi y)); tangential trace 0 on
#: the boundary of the unit square, curl curl E = 2 pi^2 E.
E_LIN = AnalyticReference(_e_lin, _e_lin_curl)


def sinusoidal_source(epsilon=1.0, mu=1.0):
    """The source f = (epsilon + 2 pi^2 / mu) E_LIN, for which E_LIN solves
    epsilon E + curl(mu^-1 curl E) = f."""
    scale = epsilon + 2.0 * np.pi ** 2 / mu

    def source(x, y):
        ex, ey = _e_lin(x, y)
        return scale * ex, scale * ey
    return source


def _coarse_values(space, E, points):
    elements = space.mesh.locate(points)
    ref = space.to_reference(elements, points)
    return (space.evaluate(E, elements, ref),
            space.evaluate_curl(E, elements, ref))


def _check_nested(space, reference):
    coarse, fine = space.mesh, reference.space.mesh
    if not coarse.n or not fine.n:
        raise UsageError('Nested references need structured meshes')
    if fine.n < coarse.n or fine.n % coarse.n:
        raise UsageError('Mesh with n=%d is not nested in the reference mesh '
                         'with n=%d' % (coarse.n, fine.n))
    if reference.space.degree != space.degree:
        raise UsageError('Reference and field have different degrees')
    return fine.n // coarse.n


def _volume_errors(space, E, reference):
    "Squared L2 and broken curl norms of E - reference."
    if isinstance(reference, AnalyticReference):
        points = space.quadrature_points()
        dv = space.quadrature_values(E) - reference.values(points)
        dc = space.quadrature_curls(E) - reference.curls(points)
        return (space.integrate((dv ** 2).sum(axis=-1)),
                space.integrate(dc ** 2))
    if not isinstance(reference, DiscreteReference):
        raise UsageError('Unknown reference %r' % (reference,))
    _check_nested(space, reference)
    fine = reference.space
    points = fine.quadrature_points()
    values, curls = _coarse_values(space, E, points)
    dv = values - fine.quadrature_values(reference.E)
    dc = curls - fine.quadrature_curls(reference.E)
    return (fine.integrate((dv ** 2).sum(axis=-1)), fine.integrate(dc ** 2))


def _trace(space, E, elements, points):
    return space.evaluate(E, elements, space.to_reference(elements, points))


def _jump_error(space, E, reference, eta):
    "sum_f alpha_f int_f [[E - reference]]^2 on the faces of ``space``."
    faces = space.mesh.faces
    boundary = faces.is_boundary
    normals = faces.normals[:, None, :]
    alpha = eta / faces.h_f
    if isinstance(reference, AnalyticReference):
        points, weights = space.face_quadrature()
        left = space.face_traces(E, 'left')
        jumps = cross(normals, left - space.face_traces(E, 'right'))
        jumps[boundary] = cross(normals[boundary], left[boundary]
                                - reference.values(points[boundary]))
        return float((alpha[:, None] * weights * jumps ** 2).sum())

    ratio = _check_nested(space, reference)
    fine = reference.space
    # every coarse face is a union of ratio fine faces; Gauss points of
    # the fine sub-segments
    rule = space.edge_quadrature
    t = ((np.arange(ratio)[:, None] + rule.points[None, :]) / ratio).ravel()
    points = (faces.starts[:, None, :] * (1.0 - t)[None, :, None]
              + faces.ends[:, None, :] * t[None, :, None])
    weights = faces.lengths[:, None] * np.tile(rule.weights / ratio,
                                               ratio)[None, :]
    left = faces.left[:, None]
    right = np.where(boundary, faces.left, faces.right)[:, None]
    coarse_l = _trace(space, E, left, points)
    coarse_r = _trace(space, E, right, points)
    delta = _NUDGE * normals
    fine_left = fine.mesh.locate(points - delta)
    fine_right = fine.mesh.locate(points + delta)
    fine_l = _trace(fine, reference.E, fine_left, points)
    fine_r = _trace(fine, reference.E, fine_right, points)
    diff = (coarse_l - fine_l) - (coarse_r - fine_r)
    diff[boundary] = (coarse_l - fine_l)[boundary]
    jumps = cross(normals, diff)
    return float((alpha[:, None] * weights * jumps ** 2).sum())


def l2_error(space, E, reference):
    """L2 norm of ``E - reference``.

    ``reference`` is an :class:`AnalyticReference` (integrated with the
    quadrature of ``space``) or a :class:`DiscreteReference` on a nested
    finer mesh (integrated with the fine quadrature).
    """
    l2, _ = _volume_errors(space, E, reference)
    return float(np.sqrt(l2))


def energy_error(space, E, reference, eta):
    """Energy norm of ``E - reference``: L2, broken curl and penalty
    weighted tangential jumps on the faces of ``space``, with
    alpha = eta / h_f. An analytic reference has no jump on interior faces
    and the jump n x E_ref on the boundary."""
    l2, curl = _volume_errors(space, E, reference)
    jumps = _jump_error(space, E, reference, eta)
    return float(np.sqrt(l2 + curl + jumps))


def energy_norm(space, E, eta):
    "||E||_h of a single discrete field."
    if not isinstance(space, DGSpace):
        raise UsageError('energy_norm needs a DGSpace')
    if isinstance(E, DoFVector):
        E = E.values
    N = assemble_energy_matrix(space, eta)
    return float(np.sqrt(max(np.dot(E, N.dot(E)), 0.0)))


def eoc(errors):
    """Empirical orders log2(e_{i-1} / e_i) of a sequence of errors under
    mesh halving; NaN where an error is not positive.

    >>> eoc([4.0, 1.0])
    array([2.])
    """
    errors = np.asarray(errors, dtype=float)
    if errors.size < 2:
        return np.zeros(0)
    prev, cur = errors[:-1], errors[1:]
    valid = (prev > 0) & (cur > 0)
    with np.errstate(divide='ignore', invalid='ignore'):
        orders = np.log2(np.where(valid, prev, 1.0) / np.where(valid, cur, 1.0))
    return np.where(valid, orders, np.nan)
