"""
Structured triangulations of the unit square and their face topology.
"""
from __future__ import absolute_import, division, print_function

import logging
from collections import namedtuple

import numpy as np

from ..core.config import get_option
from ..core.utils import (CapacityError, TopologyError, DomainError, is_int,
                          check_positive)

logger = logging.getLogger(__name__)

__all__ = ['Mesh2D', 'Face', 'ProblemCoefficients', 'INTERIOR', 'BOUNDARY',
           'build_structured', 'enumerate_faces', 'element_diameter']

INTERIOR = 'interior'
BOUNDARY = 'boundary'

# local edges of a triangle, as pairs of local vertex indices
LOCAL_EDGES = np.array([[0, 1], [1, 2], [2, 0]])

Face = namedtuple('Face', ['index', 'vertices', 'kind', 'left', 'right',
                           'normal', 'length', 'h_f'])


def _readonly(arr):
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


class ProblemCoefficients(object):
    """Coefficients of the curl-curl problem: permittivity ``epsilon``,
    permeability ``mu`` and the penalty constant ``eta``; the face penalty
    is ``alpha = eta / h_f``.
    """
    def __init__(self, epsilon=None, mu=None, eta=None):
        if epsilon is None:
            epsilon = get_option('problem.epsilon')
        if mu is None:
            mu = get_option('problem.mu')
        if eta is None:
            eta = get_option('ipdg.eta')
        self.epsilon = check_positive('epsilon', epsilon)
        self.mu = check_positive('mu', mu)
        self.eta = check_positive('eta', eta)

    def alpha(self, h_f):
        return self.eta / np.asarray(h_f)

    def scaled(self, factor):
        "Coefficients (epsilon/factor, mu/factor), same eta."
        return ProblemCoefficients(self.epsilon / factor, self.mu / factor,
                                   self.eta)

    def __repr__(self):
        return 'ProblemCoefficients(epsilon=%g, mu=%g, eta=%g)' % (
            self.epsilon, self.mu, self.eta)


class Mesh2D(object):
    """Triangulation of the unit square.

    Vertices are stored as an ``(nv, 2)`` array, triangles as ``(nt, 3)``
    vertex indices in counterclockwise order. Face arrays are computed on
    first access and cached; all arrays are read-only.
    """
    def __init__(self, vertices, triangles, n=None, level=None):
        self.vertices = _readonly(np.asarray(vertices, dtype=float))
        self.triangles = _readonly(np.asarray(triangles, dtype=np.int64))
        self.n = n
        self.level = level
        self._faces = None
        areas = self.signed_areas()
        if len(areas) and areas.min() <= 0:
            raise TopologyError('Triangles must be counterclockwise '
                                'with positive area')

    @property
    def h(self):
        "Grid spacing 1/n (the reported mesh size)."
        return 1.0 / self.n if self.n else None

    def __len__(self):
        return self.triangles.shape[0]

    @property
    def n_vertices(self):
        return self.vertices.shape[0]

    def corners(self):
        "Return the ``(nt, 3, 2)`` array of triangle vertex coordinates."
        return self.vertices[self.triangles]

    def signed_areas(self):
        p = self.corners()
        d1 = p[:, 1] - p[:, 0]
        d2 = p[:, 2] - p[:, 0]
        return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])

    def diameters(self):
        p = self.corners()
        edges = p[:, LOCAL_EDGES[:, 1]] - p[:, LOCAL_EDGES[:, 0]]
        return np.sqrt((edges ** 2).sum(axis=2)).max(axis=1)

    def centroids(self):
        return self.corners().mean(axis=1)

    # face topology

    @property
    def faces(self):
        if self._faces is None:
            self._faces = _FaceArrays(self)
        return self._faces

    @property
    def n_faces(self):
        return len(self.faces.left)

    def face(self, index):
        fa = self.faces
        right = int(fa.right[index])
        return Face(index=int(index),
                    vertices=tuple(int(v) for v in fa.vertices[index]),
                    kind=BOUNDARY if right < 0 else INTERIOR,
                    left=int(fa.left[index]),
                    right=None if right < 0 else right,
                    normal=fa.normals[index].copy(),
                    length=float(fa.lengths[index]),
                    h_f=float(fa.h_f[index]))

    # point location

    def locate(self, points):
        """Return the element index containing each point, using the
        structured index arithmetic of :func:`build_structured` meshes."""
        if not self.n:
            raise TopologyError('Point location needs a structured mesh')
        points = np.asarray(points, dtype=float)
        n = self.n
        sx = points[..., 0] * n
        sy = points[..., 1] * n
        i = np.clip(np.floor(sx).astype(np.int64), 0, n - 1)
        j = np.clip(np.floor(sy).astype(np.int64), 0, n - 1)
        upper = (sy - j) > (sx - i)
        return 2 * (j * n + i) + upper.astype(np.int64)

    def __repr__(self):
        return '<Mesh2D level=%s n=%s triangles=%d vertices=%d>' % (
            self.level, self.n, len(self), self.n_vertices)


class _FaceArrays(object):
    "Vectorized face data of a mesh."
    def __init__(self, mesh):
        tri = mesh.triangles
        nt = tri.shape[0]
        local = tri[:, LOCAL_EDGES]                   # (nt, 3, 2)
        flat = local.reshape(-1, 2)
        key = np.sort(flat, axis=1)
        uniq, inverse, counts = np.unique(key, axis=0, return_inverse=True,
                                          return_counts=True)
        inverse = inverse.reshape(-1)
        if counts.max(initial=0) > 2:
            bad = uniq[counts > 2][0]
            raise TopologyError('Non-manifold edge %s shared by %d triangles'
                                % (tuple(bad), counts.max()))
        nf = uniq.shape[0]
        owner = np.repeat(np.arange(nt), 3)
        edge_local = np.tile(np.arange(3), nt)
        # stable sort keeps the lowest element index first for each face
        order = np.argsort(inverse, kind='stable')
        first = np.searchsorted(inverse[order], np.arange(nf), side='left')
        left_slot = order[first]
        second = first + 1
        right = np.full(nf, -1, dtype=np.int64)
        right_local = np.full(nf, -1, dtype=np.int64)
        two = counts == 2
        right_slot = order[second[two]]
        right[two] = owner[right_slot]
        right_local[two] = edge_local[right_slot]

        self.vertices = _readonly(uniq)
        self.left = _readonly(owner[left_slot])
        self.left_local = _readonly(edge_local[left_slot])
        self.right = _readonly(right)
        self.right_local = _readonly(right_local)
        self.element_faces = _readonly(inverse.reshape(nt, 3))

        # the oriented edge p -> q of the (counterclockwise) left element
        pq = flat[left_slot]
        p = mesh.vertices[pq[:, 0]]
        q = mesh.vertices[pq[:, 1]]
        d = q - p
        lengths = np.sqrt((d ** 2).sum(axis=1))
        self.starts = _readonly(p)
        self.ends = _readonly(q)
        self.lengths = _readonly(lengths)
        self.normals = _readonly(np.stack([d[:, 1], -d[:, 0]], axis=1)
                                 / lengths[:, None])
        h_k = mesh.diameters()
        h_f = h_k[self.left].copy()
        h_f[two] = np.minimum(h_k[self.left[two]], h_k[right[two]])
        self.h_f = _readonly(h_f)
        self.is_boundary = _readonly(~two)
        logger.debug('Enumerated %d faces (%d boundary)', nf,
                     int((~two).sum()))

    def __len__(self):
        return len(self.left)

    @property
    def interior(self):
        return np.flatnonzero(~self.is_boundary)

    @property
    def boundary(self):
        return np.flatnonzero(self.is_boundary)


def build_structured(level):
    """Build the uniform triangulation of (0,1)^2 with ``n = 2**level``
    cells per side, each cell split along its (0,0)-(1,1) diagonal.

    >>> len(build_structured(1))
    8
    """
    if not is_int(level) or level < 0:
        raise DomainError('level must be a non-negative integer: %r' % (level,))
    max_level = get_option('mesh.max_level')
    if level > max_level:
        raise CapacityError('Refinement level %d exceeds the limit %d'
                            % (level, max_level))
    n = 2 ** level
    ticks = np.linspace(0.0, 1.0, n + 1)
    xx, yy = np.meshgrid(ticks, ticks)
    vertices = np.stack([xx.ravel(), yy.ravel()], axis=1)
    i, j = np.meshgrid(np.arange(n), np.arange(n))
    v00 = (j * (n + 1) + i).ravel()
    v10 = v00 + 1
    v01 = v00 + n + 1
    v11 = v01 + 1
    lower = np.stack([v00, v10, v11], axis=1)
    upper = np.stack([v00, v11, v01], axis=1)
    # element 2c is the lower triangle of cell c, 2c+1 the upper one
    triangles = np.stack([lower, upper], axis=1).reshape(-1, 3)
    mesh = Mesh2D(vertices, triangles, n=n, level=level)
    logger.info('Built structured mesh level %d: %d triangles', level,
                len(mesh))
    return mesh


def enumerate_faces(mesh):
    "Return the list of :class:`Face` records of a mesh."
    return [mesh.face(index) for index in range(mesh.n_faces)]


def element_diameter(mesh, element):
    "Longest edge length of a triangle."
    if not is_int(element) or element < 0 or element >= len(mesh):
        raise DomainError('Invalid element index %r for a mesh of %d '
                          'triangles' % (element, len(mesh)))
    return float(mesh.diameters()[element])
