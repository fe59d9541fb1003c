"""Exception types shared across the package."""


class PolytopeError(Exception):
    """Base class for everything raised on purpose by this package."""


class InvalidInputError(PolytopeError):
    """Rejected input: a bad incidence matrix, document, expression, or
    a construction precondition failure. Maps to CLI exit code 2."""


class InconsistencyError(PolytopeError):
    """Two independent decision paths disagreed. This is a bug detector
    and should never fire on valid input. Maps to CLI exit code 3."""
