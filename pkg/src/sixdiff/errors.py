"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates the mathematical precondition of an operation."""


class NotOnCurveError(DomainError):
    pass


class SingularCurveError(DomainError):
    pass


class NonSquarefreeError(DomainError):
    pass


class ExceptionalPointError(DomainError):
    """A birational map is undefined at the given point."""

    def __init__(self, message: str, coordinate=None):
        super().__init__(message)
        self.coordinate = coordinate
