"""SUSY quantum mechanics solver for the ring-shaped Hartmann potential.

Thin wrapper over the C++ extension.  Everything works in atomic units
(mu = hbar = e = 1), where gamma = eta * sigma**2 and the bound spectrum is
E_N = -gamma**2 / (2 N**2).
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
