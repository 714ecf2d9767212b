"""Certified commensurability invariants of knots."""

from ._knotcomm import *  # noqa: F401,F403
from ._knotcomm import __version__  # noqa: F401
