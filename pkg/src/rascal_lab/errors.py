"""Exception hierarchy shared by every module."""


class RascalError(Exception):
    """Base class for all errors raised by rascal_lab."""


class EmptyInputError(RascalError, ValueError):
    pass


class PositionError(RascalError, IndexError):
    pass


class IntegralityError(RascalError, ArithmeticError):
    """A generator produced a non-integer value at ``cell``."""

    def __init__(self, cell, message=None):
        self.cell = cell
        super().__init__(message or f"non-integer value at cell {cell}")


class RuleApplicabilityError(RascalError, ValueError):
    pass


class PatternApplicabilityError(RascalError, ValueError):
    pass


class GeometryError(RascalError, ValueError):
    def __init__(self, cell, message=None):
        self.cell = cell
        super().__init__(message or f"ring cell {cell} lies outside the triangle")


class InsufficientDataError(RascalError, ValueError):
    pass


class ParseError(RascalError, ValueError):
    pass
