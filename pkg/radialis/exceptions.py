"""
Exception hierarchy for radialis

Library code raises these; the command-line front end maps them to exit codes.
"""

from typing import Optional


class RadialisError(Exception):
    """Base class for all radialis errors"""


class ValidationError(RadialisError, ValueError):
    """Invalid parameters or malformed input data"""


class DomainError(RadialisError, ValueError):
    """A radius or argument lies outside the domain of a computation"""

    def __init__(self, message: str, radius: Optional[float] = None):
        if radius is not None:
            message = f"{message} (r={radius!r})"
        super().__init__(message)
        self.radius = radius


class ConjugatePointError(DomainError):
    """A Jacobi field is evaluated at or beyond its first conjugate point"""


class CriticalPointError(DomainError):
    """The derivative of a radial function is too small to invert"""


class NumericalError(RadialisError, ArithmeticError):
    """A quadrature or extrapolation failed to reach its target accuracy"""

    def __init__(self, message: str, achieved: Optional[float] = None):
        if achieved is not None:
            message = f"{message} (achieved {achieved:.3e})"
        super().__init__(message)
        self.achieved = achieved


class ProfileFormatError(ValidationError):
    """A profile CSV file could not be parsed"""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
