"""Shared error types for contract guards and theorem checks."""


class GuardError(ValueError):
    """A size or mode guard was hit; pass override_guards to proceed anyway
    where the API allows it."""


class TheoremViolation(AssertionError):
    """A computed decomposition disagrees with the proven closed form."""


class InfeasibleError(ValueError):
    """No assignment satisfies the requested multiplicity data."""
