"""Exception types.  Every ``DomainError`` is a precondition violation that the
CLI reports with exit code 1."""


class DomainError(Exception):
    pass


class OrderMismatchError(DomainError, ValueError):
    pass


class ParseError(DomainError, ValueError):
    pass


class ExactDivisionError(DomainError, ArithmeticError):
    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class DegeneratePencilError(DomainError, ValueError):
    pass


class KernelDimensionError(DomainError):
    def __init__(self, message, dimension):
        super().__init__(message)
        self.dimension = dimension


class NotRealizableError(DomainError):
    pass


class SingularInvariantError(DomainError, ZeroDivisionError):
    pass


class NoRelationError(DomainError):
    pass


class UnderdeterminedRelationError(DomainError):
    def __init__(self, message, dimension):
        super().__init__(message)
        self.dimension = dimension
