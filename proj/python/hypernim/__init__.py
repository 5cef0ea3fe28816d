"""Exact analysis of impartial games under hypergraph combination.

Thin python surface over the C++ core: hypergraph families, exact integer
packing, SG and longest-play solvers, and the seeded verification sweeps.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
