"""Constrained (twisted) Cheeger optimisation for two-ball configurations.

Thin python surface over the C++ core: profile evaluation, geometry
quotients, structure-aware minimisation, symmetry-breaking thresholds, and
the claim-verification registry.
"""

try:
    from ._tcheeger import *  # noqa: F401,F403  (installed wheel layout)
    from ._tcheeger import SolverError  # noqa: F401
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _tcheeger import *  # noqa: F401,F403
    from _tcheeger import SolverError  # noqa: F401

__version__ = "0.1.0"
