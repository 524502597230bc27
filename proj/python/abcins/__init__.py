"""Python bindings for the abcins library."""

from ._abcins import *  # noqa: F401,F403
from ._abcins import __version__  # noqa: F401
