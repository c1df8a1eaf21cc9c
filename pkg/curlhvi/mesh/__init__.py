from __future__ import absolute_import, division, print_function

from .mesh2d import (Mesh2D, Face, ProblemCoefficients, INTERIOR, BOUNDARY,
                     build_structured, enumerate_faces, element_diameter)

__all__ = ['Mesh2D', 'Face', 'ProblemCoefficients', 'INTERIOR', 'BOUNDARY',
           'build_structured', 'enumerate_faces', 'element_diameter']
