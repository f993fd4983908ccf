"""Exception types shared across the package."""


class ListRadiusError(Exception):
    """Base class for all library errors."""


class DomainError(ListRadiusError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SizeLimitError(ListRadiusError, ValueError):
    """An exact enumeration was requested beyond its hard size caps."""


class NoSolutionError(ListRadiusError, ArithmeticError):
    """A root or crossover does not exist in the searched interval."""
