"""Backlund transformations of constant-torsion curves in Galilean-type spaces.

Thin wrapper over the compiled extension; everything is re-exported here.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
