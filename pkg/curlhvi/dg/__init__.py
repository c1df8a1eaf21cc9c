from __future__ import absolute_import, division, print_function

from .quadrature import QuadratureRule, triangle_rule, edge_rule
from .space import (DGSpace, DoFVector, lagrange_basis, eval_basis,
                    eval_field, tangential_jump, scalar_tangential_jump,
                    average, cross, l2_project)
from .assembly import (LoadFunctional, assemble_bilinear, assemble_mass,
                       assemble_curl_curl, assemble_consistency,
                       assemble_penalty, assemble_energy_matrix,
                       assemble_load, assemble_subgradient_load,
                       assemble_samples_load)

__all__ = ['QuadratureRule', 'triangle_rule', 'edge_rule',
           'DGSpace', 'DoFVector', 'lagrange_basis', 'eval_basis',
           'eval_field', 'tangential_jump', 'scalar_tangential_jump',
           'average', 'cross', 'l2_project',
           'LoadFunctional', 'assemble_bilinear', 'assemble_mass',
           'assemble_curl_curl', 'assemble_consistency', 'assemble_penalty',
           'assemble_energy_matrix', 'assemble_load',
           'assemble_subgradient_load', 'assemble_samples_load']
