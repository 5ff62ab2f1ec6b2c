"""Exceptions raised across the package.

Every input or precondition failure is a ``ValueError`` so that callers can catch
the whole family at once. Verdicts of a reduction run (a loop, exceeded limits) are
returned as values and never raised.
"""


class BocsError(ValueError):
    """Base class for all recoverable errors of the package."""


class ParseError(BocsError):
    """A bocs, algebra or script file could not be read.

    Attributes:
        line: 1-based line number of the offending input.
        column: 1-based column of the offending token.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InconsistentSystemError(BocsError):
    """A linear system has no solution."""


class NotFiniteDimensionalError(BocsError):
    """The path span did not stabilise within the length cap."""


class ResolutionCapError(BocsError):
    """A projective resolution did not terminate within the length cap."""


class MoveError(BocsError):
    """A scripted reduction move is not applicable."""


class SearchSpaceError(BocsError):
    """The enumeration oracle would exceed its configured budget."""


class InverseConstructionError(RuntimeError):
    """An invertible-diagonal bocs morphism had no two-sided inverse."""
