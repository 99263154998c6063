"""Exception hierarchy shared across the library and the CLI.

The CLI maps these onto stable exit codes (see ``casimirkg.cli``):
invalid input -> 2, bracket/model failures -> 3, accuracy failures -> 4,
verification failures -> 5.
"""


class CasimirKGError(Exception):
    """Base class for all library errors."""


class DomainError(CasimirKGError, ValueError):
    """An argument lies outside the operation's documented domain."""


class ConfigurationError(CasimirKGError, ValueError):
    """Inconsistent or unstable solver configuration (e.g. CFL violation)."""


class GridError(CasimirKGError, ValueError):
    """Grid shape mismatch, or a domain too small for the light cone."""


class BracketError(CasimirKGError, ValueError):
    """Root bracket does not contain a sign change."""


class UnsupportedModelError(CasimirKGError, ValueError):
    """Operation undefined for the given physical model (e.g. attractive sign)."""


class AccuracyError(CasimirKGError, RuntimeError):
    """Requested tolerance could not be met.

    Carries the best available estimate and its error bound so callers can
    decide whether the partial result is still usable.
    """

    def __init__(self, message, value=None, est_error=None):
        super().__init__(message)
        self.value = value
        self.est_error = est_error


class VerificationFailure(CasimirKGError, RuntimeError):
    """Cross-validation between two solution routes exceeded its bound."""
