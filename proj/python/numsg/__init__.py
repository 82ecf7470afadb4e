"""Numerical semigroups, their quotients S/d and fixed-quotient fibers."""

from ._numsg import *  # noqa: F401,F403
from ._numsg import NumsgError, NumericalSemigroup, FiberContext, DeltaDaSpec

__all__ = [name for name in dir() if not name.startswith("_")]
