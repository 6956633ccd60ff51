"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed input: wrong shape, non-finite entries, or bad file contents."""


class InvalidExponentError(InvalidInputError):
    """A Schatten exponent outside [1, inf] (or an unparsable exponent string)."""


class PreconditionError(InvalidInputError):
    """An operation was called on an input that violates its documented precondition."""


class UnsupportedInstanceError(ValueError):
    """The instance is valid but outside the supported size range of the operation."""
