"""Simulation toolkit for oblivious transfer, non-local boxes, and one-qubit channels.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from obtsim._core import *  # noqa: F401,F403
from obtsim._core import __version__  # noqa: F401
