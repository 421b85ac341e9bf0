"""Exception types raised by the bearing model.

Everything the solver or config layer can reject deliberately comes
through one of these, so callers can distinguish bad input from a bug.
"""


class BearingError(Exception):
    """Base class for all deliberate failures in this package."""


class ConfigError(BearingError):
    """Malformed, incomplete, or physically invalid configuration."""


class ConvergenceError(BearingError):
    """An iterative solve failed to reach its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SeatSeparationError(BearingError):
    """Both wire seat lines lost contact; the model no longer applies."""


class ContactLossError(BearingError):
    """Requested an operating point where the contact is fully unloaded."""
