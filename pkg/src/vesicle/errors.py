"""Exception hierarchy shared by all modules."""


class VesicleError(ValueError):
    """Base class for every error raised by the package."""


class BoundsError(VesicleError):
    """An integer argument (length, order) lies outside its supported range."""


class DomainError(VesicleError):
    """A parameter lies outside the domain of the requested evaluation."""


class InvariantError(VesicleError):
    """A configuration violates the walk-pair invariants (e.g. crossing paths)."""


class ConvergenceError(VesicleError):
    """A series or continued fraction failed to converge within its budget."""


class SingularError(VesicleError):
    """A denominator vanished: the point sits on (or past) a pole or branch cut.

    ``value`` carries the offending denominator or radicand when known.
    """

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class FitDomainError(VesicleError):
    """Data handed to a log-log fit contains non-positive values."""
