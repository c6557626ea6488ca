"""Exception hierarchy shared by all pzeta modules."""


class PZetaError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PZetaError, ValueError):
    """Argument lies outside the supported domain of an operation."""


class PoleError(DomainError):
    """Argument sits on a pole or logarithmic singularity."""


class CapacityError(PZetaError, ValueError):
    """Requested table size exceeds the configured ceiling."""


class RangeError(PZetaError, ValueError):
    """Query falls outside the range covered by a precomputed table."""


class ConvergenceError(PZetaError, ArithmeticError):
    """An iterative evaluation failed to converge."""


class E1OverflowError(PZetaError, OverflowError):
    """exp(-z) leaves the binary64 range."""
