"""Exception hierarchy shared by every wodot module."""


class WodotError(Exception):
    """Base class for all library errors."""


class PreconditionError(WodotError, ValueError):
    """An operation was called outside its contract."""


class GroupMismatchError(PreconditionError):
    """Operands are bound to different groups."""


class NotApplicableError(PreconditionError):
    """The hypothesis of a structural statement does not hold for the input."""


class BudgetExceededError(WodotError):
    """Input is too large to verify within the configured enumeration budget."""


class TheoremViolation(WodotError):
    """A computation contradicted a proven statement.

    Seeing this means a bug in the library (or a false theorem), never bad input.
    """
