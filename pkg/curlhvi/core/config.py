from __future__ import absolute_import, division, print_function

options = {}
default_values = {}


def _get_option(pat, default_val=None):
    return options[pat] if pat in options else default_val


def _set_option(pat, val, default_val=None):
    options[pat] = val
    if default_val is not None:
        default_values[pat] = default_val


def _register_option(pat, val, default_val=None):
    _set_option(pat, val, val if default_val is None else default_val)

get_option = _get_option
set_option = _set_option
register_option = _register_option


class option_context(object):
    """Temporarily set options, e.g.

    >>> with option_context('ipdg.eta', 10.0):
    ...     get_option('ipdg.eta')
    10.0
    """
    def __init__(self, *args):
        if not (len(args) % 2 == 0 and len(args) >= 2):
            raise ValueError('Need to invoke as'
                             'option_context(pat, val, [(pat, val), ...)).')

        self.ops = list(zip(args[::2], args[1::2]))
        self.undo = None

    def __enter__(self):
        undo = []
        for pat, val in self.ops:
            undo.append((pat, get_option(pat)))

        self.undo = undo

        for pat, val in self.ops:
            set_option(pat, val)

    def __exit__(self, *args):
        if self.undo:
            for pat, val in self.undo:
                set_option(pat, val)

if len(options) == 0:
    register_option('mesh.max_level', 12)
    register_option('dg.degree', 1)
    register_option('problem.epsilon', 1.0)
    register_option('problem.mu', 1.0)
    register_option('ipdg.eta', 1000.0)
    register_option('potential.a', 0.004)
    register_option('potential.b', 0.002)
    register_option('potential.beta', 100.0)
    register_option('potential.tol_zero', 1e-12)
    register_option('uzawa.eps', 1e-10)
    register_option('uzawa.max_iters', 200)
    register_option('linalg.cg_rel_tol', 1e-12)
    register_option('linalg.cg_max_iter', 10000)
    register_option('display.precision', 6)
