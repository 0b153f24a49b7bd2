"""Exception hierarchy.

Every error carries a short ``code`` (the class name) so the CLI can print a
one-line, machine-parseable diagnostic and pick an exit status.
"""


class TorifanError(Exception):
    """Base class for all domain errors (CLI exit code 1)."""

    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__


class ZeroVector(TorifanError, ValueError):
    pass


class NotUnimodular(TorifanError, ValueError):
    pass


class NotStrictlyConvex(TorifanError, ValueError):
    pass


class WrongOrientation(TorifanError, ValueError):
    pass


class IndexOutOfRange(TorifanError, IndexError):
    pass


class NotExceptional(TorifanError, ValueError):
    pass


class TooSmall(TorifanError, ValueError):
    pass


class NotRealizable(TorifanError, ValueError):
    pass


class InvalidFan(TorifanError, ValueError):
    pass


class NonPositive(TorifanError, ValueError):
    pass


class OutOfRange(TorifanError, ValueError):
    pass


class IntegerInput(TorifanError, ValueError):
    pass


class NotCoprime(TorifanError, ValueError):
    pass


class PEqualsOne(TorifanError, ValueError):
    pass


class NotComplete(TorifanError, ValueError):
    pass


class NotSmooth(TorifanError, ValueError):
    pass


class InvalidTarget(TorifanError, ValueError):
    pass


class TypeMismatch(TorifanError, ValueError):
    pass


class NotOneExceptional(TorifanError, ValueError):
    pass


class MissingStructure(TorifanError, ValueError):
    pass


class BadRational(TorifanError, ValueError):
    pass


class BoundsExceeded(TorifanError, ValueError):
    pass


class ParseError(TorifanError, ValueError):
    """Malformed CLI/JSON input (exit code 2)."""

    exit_code = 2

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InternalContradiction(TorifanError, AssertionError):
    """A combinatorial theorem the library relies on was violated (exit code 3).

    This should never be raised; if it is, either the input bypassed
    validation or there is a bug.
    """

    exit_code = 3
