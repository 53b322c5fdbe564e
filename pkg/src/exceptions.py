"""
Error hierarchy for the homology cylinder toolkit.

Library code raises these; the CLI maps them to exit codes.

Author: Robert Torres
"""

from typing import Optional


class HomocylError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HomocylError, ValueError):
    """Input outside the domain of an operation."""


class VariableMismatchError(DomainError):
    """Two polynomials or matrices live over different variable lists."""


class UnknownGeneratorError(DomainError):
    """A word mentions a generator the homomorphism does not cover."""

    def __init__(self, message: str, generators: Optional[list] = None):
        super().__init__(message)
        self.generators = list(generators or [])


class DegenerateAlexanderError(DomainError):
    """The Alexander polynomial vanishes."""


class SingularMatrixError(DomainError):
    """A matrix that must be invertible has zero determinant."""


class NotRationalHomologyCylinderError(SingularMatrixError):
    """(A;B) is singular: the data does not describe a rational homology cylinder."""


class NonAcyclicError(SingularMatrixError):
    """The exterior chain complex is not acyclic over the fraction field."""


class InvalidDropError(DomainError):
    """The dropped generator has trivial image under rho."""


class PresentationError(DomainError):
    """Semantic problem with a presentation (deficiency, rho, generators)."""

    def __init__(self, message: str, issues: Optional[list] = None):
        super().__init__(message)
        self.issues = list(issues or [])


class InputSyntaxError(DomainError):
    """Malformed input file, with the position of the offending token."""

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.path = path
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"{path or '<input>'}:{line}:{column or 1}: "
        super().__init__(f"{location}{message}")


class ExactDivisionError(HomocylError, ArithmeticError):
    """An exact division that must succeed did not; signals an internal bug."""
