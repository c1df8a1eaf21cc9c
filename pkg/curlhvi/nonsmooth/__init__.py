from __future__ import absolute_import, division, print_function

from .potential import (ExponentialDecayPotential, omega, psi, subgradient,
                        psi0)

__all__ = ['ExponentialDecayPotential', 'omega', 'psi', 'subgradient', 'psi0']
