"""Exception types shared across the package."""


class PolyslipError(Exception):
    """Base class for all errors raised by polyslip."""


class DomainError(PolyslipError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NotSL2(DomainError):
    """The matrix is not volume preserving (determinant differs from 1)."""


class DegenerateBeta(DomainError):
    """The image of the slip direction is too short to decompose."""


class ParallelSlips(DomainError):
    """Two slip directions coincide up to sign."""


class GammaOutOfRange(DomainError):
    """Shear parameter outside the admissible interval of the construction."""


class EmptyInput(DomainError):
    """An operation received an empty collection."""


class InvalidPolycrystal(DomainError):
    """A polycrystal violates its structural invariants."""
