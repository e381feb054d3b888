"""Exact friezes over Z[sqrt(2)] from polygon dissections.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._pellfrieze import *  # noqa: F401,F403
from ._pellfrieze import __doc__  # noqa: F401

__version__ = "0.1.0"
