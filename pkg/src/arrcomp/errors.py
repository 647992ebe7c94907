"""Exception types shared across the package."""


class ArrcompError(Exception):
    """Base class for all errors raised by arrcomp."""


class ZeroNormalError(ArrcompError, ValueError):
    """A hyperplane was given with an all-zero normal vector."""


class DuplicateHyperplaneError(ArrcompError, ValueError):
    """Two forms define the same hyperplane (equal up to a nonzero scalar)."""


class DimensionMismatchError(ArrcompError, ValueError):
    """A vector or form does not match the ambient dimension."""


class InvalidParameterError(ArrcompError, ValueError):
    """A numeric parameter is outside its allowed range."""


class IndexOutOfRangeError(ArrcompError, IndexError):
    """A hyperplane index does not exist in the arrangement."""


class FlatNotFoundError(ArrcompError, LookupError):
    """A flat id does not exist in the intersection poset."""


class MalformedBettiError(ArrcompError, ValueError):
    """A Betti sequence is empty, does not start with 1, or has negative entries."""


class ParseError(ArrcompError, ValueError):
    """Arrangement file is syntactically invalid.

    Carries the 1-based source line (and column where known) so the CLI can
    point at the offending token.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
