"""Exception types shared across the package."""


class GuardExceeded(RuntimeError):
    """An enumeration would exceed its configured size guard."""


class TheoremViolation(Exception):
    """A structural identity that should always hold was found to fail.

    ``details`` carries enough context to reproduce the failure.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class InconsistentProjection(ValueError):
    """A projected vector could not be lifted back to a consistent matrix."""


class SingularSystem(ValueError):
    """A linear system that must be uniquely solvable was not."""
