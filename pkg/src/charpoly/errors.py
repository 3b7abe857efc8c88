class FeasibilityError(ValueError):
    """Requested bounds are too large to enumerate or store."""


class ConsistencyError(ArithmeticError):
    """A value that must be a nonnegative integer came out otherwise."""
