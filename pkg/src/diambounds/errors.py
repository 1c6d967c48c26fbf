"""Exception types shared across the package."""


class DiamBoundsError(Exception):
    pass


class DomainError(DiamBoundsError, ValueError):
    """An argument lies outside the domain of an operation.

    ``certain`` is False when the violation could only not be *excluded* at the
    working precision (an enclosure straddles the boundary); callers that can
    raise the precision may retry.
    """

    def __init__(self, message: str, certain: bool = True):
        super().__init__(message)
        self.certain = certain


class NotApplicable(DiamBoundsError):
    """A bound family's hypothesis is not met by the given parameters."""


class Undecidable(DiamBoundsError):
    """The rigorous comparator exhausted its precision ladder."""


class BudgetExceeded(DiamBoundsError):
    pass


class EmptyPolytope(DiamBoundsError):
    pass


class Unbounded(DiamBoundsError):
    pass


class Disconnected(DiamBoundsError):
    pass


class ParseError(DiamBoundsError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
