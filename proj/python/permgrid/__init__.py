"""Simple permutations, pin sequences and monotone griddability."""

from ._core import *  # noqa: F401,F403
from ._core import PermgridError  # noqa: F401
