from __future__ import absolute_import, division, print_function

from .export import (mesh_frame, field_frame, scalar_frame, write_mesh_csv,
                     write_field_csv, write_scalar_csv, write_iteration_log,
                     write_matrix, snapshot_writer)

__all__ = ['mesh_frame', 'field_frame', 'scalar_frame', 'write_mesh_csv',
           'write_field_csv', 'write_scalar_csv', 'write_iteration_log',
           'write_matrix', 'snapshot_writer']
