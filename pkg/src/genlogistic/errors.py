"""Exception types raised by the library."""


class GenLogisticError(Exception):
    """Base class for all library errors."""


class PoleError(GenLogisticError, ValueError):
    """Gamma evaluated at (or within 1e-14 of) a non-positive integer."""


class DomainError(GenLogisticError, ValueError):
    """Argument outside the region where an operation is defined."""


class ArgumentError(GenLogisticError, ValueError):
    """Malformed sampling request or parameter set."""


class NoConvergence(GenLogisticError, ArithmeticError):
    """Series or quadrature hit its work cap before reaching tolerance."""
