"""Exception hierarchy shared by every module of the package."""


class NilCleanError(Exception):
    """Base class for all errors raised by :mod:`nilclean`."""


class MixedFields(NilCleanError):
    """Operands live over different coefficient fields."""


class DivisionByZero(NilCleanError, ZeroDivisionError):
    pass


class DimensionMismatch(NilCleanError):
    pass


class DegreeMismatch(NilCleanError):
    pass


class NotMonic(NilCleanError):
    pass


class BadRank(NilCleanError):
    pass


class DegreeTooHigh(NilCleanError):
    pass


class BudgetExceeded(NilCleanError):
    """An exhaustive search would exceed its configured candidate budget."""


class WrongField(NilCleanError):
    pass


class ParseError(NilCleanError, ValueError):
    """Malformed textual input (field selector, element, polynomial, matrix)."""
