"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when a value is not in canonical form (unsorted parts, bad rows, ...)."""


class DomainError(ValueError):
    """Raised when a map is applied outside the set it is defined on."""


class InvariantError(AssertionError):
    """An internal lemma check failed. This indicates a bug, never bad input."""
