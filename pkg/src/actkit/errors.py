"""Exceptions shared across the package."""


class ActkitError(Exception):
    """Base class for all actkit-specific errors."""


class MalformedInputError(ActkitError):
    """A table, file, or argument failed structural validation."""


class SizeGuardError(ActkitError):
    """An input exceeds a hard size limit of an exact algorithm."""


class BudgetExceededError(ActkitError):
    """An enumeration ran out of its node budget."""


class InvariantViolationError(ActkitError):
    """A verified postcondition or cross-check did not hold."""


class NotApplicableError(ActkitError):
    """An operation's mathematical precondition is not met by the input."""
