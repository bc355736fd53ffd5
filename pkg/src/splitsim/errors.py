"""Exception types shared across the package."""


class SplitsimError(Exception):
    """Base class for every package-specific error."""


class DomainError(SplitsimError, ValueError):
    """An input lies outside the physical domain an operation supports."""


class ConfigurationError(SplitsimError):
    """A zone or system description is unusable (disconnected network, singular system, ...)."""


class FittingError(SplitsimError):
    """Performance-map fitting cannot proceed (degenerate grid, missing columns)."""


class ValidationError(SplitsimError):
    """A project or data file failed validation.

    Carries *every* problem found in one pass, not just the first.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
