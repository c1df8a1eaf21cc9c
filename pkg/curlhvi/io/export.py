"""
CSV and Matrix Market dumps of meshes, fields, iteration logs and
matrices, for consumption by external plotting tools.
"""
from __future__ import absolute_import, division, print_function

import logging

import numpy as np
import pandas as pd
from scipy.io import mmwrite

from ..core.utils import UsageError

logger = logging.getLogger(__name__)

__all__ = ['mesh_frame', 'field_frame', 'scalar_frame', 'write_mesh_csv',
           'write_field_csv', 'write_scalar_csv', 'write_iteration_log',
           'write_matrix', 'snapshot_writer']

_CENTROID = np.array([1.0 / 3.0, 1.0 / 3.0])


def mesh_frame(mesh):
    "One row per triangle: ``elem_id,x0,y0,x1,y1,x2,y2``."
    corners = mesh.corners().reshape(len(mesh), 6)
    df = pd.DataFrame(corners, columns=['x0', 'y0', 'x1', 'y1', 'x2', 'y2'])
    df.insert(0, 'elem_id', np.arange(len(mesh)))
    return df


def field_frame(space, E):
    "Vector field at the element quadrature points: ``elem_id,xq,yq,Ex,Ey``."
    if space.components != 2:
        raise UsageError('field_frame needs a vector DG space')
    points = space.quadrature_points()
    values = space.quadrature_values(E)
    ne, nq = points.shape[:2]
    return pd.DataFrame({'elem_id': np.repeat(np.arange(ne), nq),
                         'xq': points[..., 0].ravel(),
                         'yq': points[..., 1].ravel(),
                         'Ex': values[..., 0].ravel(),
                         'Ey': values[..., 1].ravel()},
                        columns=['elem_id', 'xq', 'yq', 'Ex', 'Ey'])


def scalar_frame(space, B, name='B'):
    "Scalar field at the element centroids: ``elem_id,B``."
    if space.components != 1:
        raise UsageError('scalar_frame needs a scalar DG space')
    elements = np.arange(space.n_elements)
    values = space.evaluate(B, elements, np.broadcast_to(
        _CENTROID, (space.n_elements, 2)))
    return pd.DataFrame({'elem_id': elements, name: values[:, 0]},
                        columns=['elem_id', name])


def write_mesh_csv(mesh, path):
    mesh_frame(mesh).to_csv(path, index=False, float_format='%.17g')
    logger.info('Wrote mesh to %s', path)


def write_field_csv(space, E, path):
    field_frame(space, E).to_csv(path, index=False, float_format='%.17g')
    logger.info('Wrote field to %s', path)


def write_scalar_csv(space, B, path):
    scalar_frame(space, B).to_csv(path, index=False, float_format='%.17g')
    logger.info('Wrote scalar field to %s', path)


def write_iteration_log(result, path):
    "``iter,rel_dE,rel_dlambda,energy`` of an Uzawa run."
    result.history_frame().to_csv(path, index=False, float_format='%.17g')


def write_matrix(A, path, comment=''):
    "Matrix Market coordinate dump of a sparse matrix."
    mmwrite(path, A, comment=comment)
    logger.info('Wrote %d x %d matrix to %s', A.shape[0], A.shape[1], path)


def snapshot_writer(field_pattern, scalar_pattern=None):
    """Callback for :meth:`MaxwellStepper.run` writing E (and B) after each
    step; the patterns are formatted with the step number, e.g.
    ``'E_%04d.csv'``."""
    def callback(n, state):
        write_field_csv(state.E.space, state.E, field_pattern % n)
        if scalar_pattern is not None:
            write_scalar_csv(state.B.space, state.B, scalar_pattern % n)
    return callback
