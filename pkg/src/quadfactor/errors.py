"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of the operation."""


class ParseError(ValueError):
    """Input text does not conform to the element/polynomial grammar."""


class ResourceLimitError(RuntimeError):
    """A degree or size guard was exceeded before the computation started."""
