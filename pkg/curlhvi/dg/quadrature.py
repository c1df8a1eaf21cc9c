from __future__ import absolute_import, division, print_function

import numpy as np

__all__ = ['QuadratureRule', 'triangle_rule', 'edge_rule']


class QuadratureRule(object):
    """Points and positive weights on a reference element.

    Triangle rules live on the reference triangle (0,0),(1,0),(0,1) and
    their weights sum to 1/2; edge rules live on [0,1] with weights
    summing to 1.
    """
    def __init__(self, points, weights, degree):
        self.points = np.asarray(points, dtype=float)
        self.weights = np.asarray(weights, dtype=float)
        self.degree = degree
        self.points.flags.writeable = False
        self.weights.flags.writeable = False

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return '<QuadratureRule %d points, degree %d>' % (len(self),
                                                           self.degree)


# symmetric 6-point rule, exact up to degree 4
_A1 = 0.44594849091596488632
_W1 = 0.22338158967801146570
_A2 = 0.09157621350977074346
_W2 = 0.10995174365532186764


def _triangle_degree4():
    points = [[_A1, _A1], [1 - 2 * _A1, _A1], [_A1, 1 - 2 * _A1],
              [_A2, _A2], [1 - 2 * _A2, _A2], [_A2, 1 - 2 * _A2]]
    weights = 0.5 * np.array([_W1] * 3 + [_W2] * 3)
    return QuadratureRule(points, weights, 4)


def _edge_gauss(npoints):
    x, w = np.polynomial.legendre.leggauss(npoints)
    return QuadratureRule(0.5 * (x + 1.0), 0.5 * w, 2 * npoints - 1)

_TRIANGLE = _triangle_degree4()
_EDGE = _edge_gauss(3)


def triangle_rule():
    return _TRIANGLE


def edge_rule():
    return _EDGE
