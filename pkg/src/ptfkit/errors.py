"""Exception types shared across the package.

The CLI maps these onto exit codes: parse failures exit 1, violated
preconditions (including dimension mismatches) exit 2.
"""


class PtfkitError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PtfkitError):
    """Malformed textual input (truth table, threshold file, vector)."""


class PreconditionError(PtfkitError):
    """An operation was called outside its documented preconditions."""


class DimensionMismatch(PreconditionError):
    """Operands disagree on the number of variables."""
