"""Exception types raised by the engine."""


class PointlessError(Exception):
    """Base class for engine failures (CLI exit code 1)."""


class PreconditionError(PointlessError, ValueError):
    """An operation was called outside its domain."""


class DepthCapError(PointlessError):
    """Subdivision hit its depth or box budget before reaching the tolerance."""


class ResolutionError(PointlessError):
    """Enclosures were too wide to tell two candidates apart.

    ``required_tol`` is a tolerance that is expected to succeed.
    """

    def __init__(self, message, required_tol=None):
        super().__init__(message)
        self.required_tol = required_tol
