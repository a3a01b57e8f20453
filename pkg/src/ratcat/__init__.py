"""Rational Catalan combinatorics: Dyck paths, associahedra, noncrossing partitions."""
from .errors import InternalError, PreconditionError, RatcatError
from .kernels import BACKEND
from .numbers import CoprimePair

__version__ = "0.1.0"

__all__ = ["BACKEND", "CoprimePair", "InternalError", "PreconditionError", "RatcatError", "__version__"]
