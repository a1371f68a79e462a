"""Exception hierarchy shared by the library and the CLI."""


class DyckError(Exception):
    """Base class for all dyckcount errors."""


class PreconditionError(DyckError, ValueError):
    """Inputs violate an operation's precondition (CLI exit status 2)."""


class EnumerationLimitError(PreconditionError):
    """Exhaustive enumeration requested above the configured step limit."""


class CrossCheckError(DyckError, ArithmeticError):
    """Two independent computations disagree, or a count came out non-integral.

    This always indicates a bug; the CLI maps it to exit status 1.
    """
