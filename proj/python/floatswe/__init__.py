"""Radial shallow-water flow coupled to a heaving floating cylinder.

Thin wrapper over the C++ core; see the package README for the model and the
operation catalogue.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
