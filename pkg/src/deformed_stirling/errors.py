"""Exception types raised across the package."""


class DeformedStirlingError(Exception):
    """Base class for all package errors."""


class VarsetMismatch(DeformedStirlingError, ValueError):
    """Operands live in different variable sets (N-mode vs bracket-mode)."""


class ParseError(DeformedStirlingError, ValueError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class NonPolynomial(ParseError):
    """Division by a non-constant expression."""


class ExponentError(ParseError):
    """Negative or non-literal exponent."""


class DegenerateBox(DeformedStirlingError, ValueError):
    """The box function makes some bracket difference vanish identically."""


class UnsupportedRoute(DeformedStirlingError, ValueError):
    """The requested computation route is not available for this box."""


class InterpolationMismatch(DeformedStirlingError, RuntimeError):
    """Interpolated polynomial disagrees with the direct formula (a bug)."""


class ShiftOutOfRange(DeformedStirlingError, ValueError):
    """A bracket index left the declared range during rewriting."""


class BoundExceeded(DeformedStirlingError, ValueError):
    """Brute-force enumeration requested above its size bound."""
