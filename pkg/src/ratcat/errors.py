"""Exception hierarchy shared by all modules."""


class RatcatError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(RatcatError, ValueError):
    """An argument violates the documented precondition of an operation."""


class InternalError(RatcatError, AssertionError):
    """A proven invariant failed; indicates a bug, never a bad input."""
