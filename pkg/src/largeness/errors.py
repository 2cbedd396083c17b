"""Exception hierarchy shared by every module."""


class LargenessError(Exception):
    """Base class for all errors raised by :mod:`largeness`."""


class DomainError(LargenessError, ValueError):
    """A value or window lies outside the ambient universe."""


class PreconditionError(LargenessError, ValueError):
    """An operation was called with arguments violating its hypotheses."""


class BoundsError(LargenessError):
    """A bounded search ran out of room before reaching its goal."""


class BudgetExceeded(BoundsError):
    """The node budget (``LARGENESS_BUDGET``) was exhausted."""


class ParseError(LargenessError, ValueError):
    """Malformed polynomial expression or JSON document."""
