"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise
the most specific class that applies instead of bare ValueError/KeyError.
"""


class SimpcentError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(SimpcentError, ValueError):
    """A parameter combination is outside the range where the quantity is defined."""


class EmptyComplexError(SimpcentError, ValueError):
    """Input describes a complex with no simplices at all."""


class MembershipError(SimpcentError, KeyError):
    """A simplex (or vertex label) is not part of the complex."""


class UndefinedValueError(SimpcentError, ValueError):
    """A measure is undefined for this input (for example a zero denominator
    that is not covered by an explicit guard, or an average over a singleton)."""


class ParseError(SimpcentError, ValueError):
    """A complex file or report file is malformed.

    Carries the 1-based line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardError(SimpcentError, ValueError):
    """A deliberately expensive operation refused to run on an input above
    its size guard."""
