"""Custom exceptions raised by pluckx."""

from click import ClickException


class PluckxError(ClickException):
    """The base exception for the pluckx project.

    Every error is a usage or precondition failure from the caller's point of view,
    so the CLI exits with status 2 when one escapes a command.
    """

    exit_code = 2


class DimensionMismatchError(PluckxError):
    """Operands live in spaces of different dimension or variance."""


class GradeError(PluckxError):
    """A multivector has the wrong grade for the requested operation."""


class SingularMatrixError(PluckxError):
    """A matrix that must be invertible is singular."""


class NotSkewSymmetricError(PluckxError):
    """Pfaffian input is not a skew-symmetric matrix of even size."""


class ZeroPolynomialError(PluckxError):
    """An operation is undefined on the zero polynomial."""


class DependentVectorsError(PluckxError):
    """Vectors that must be linearly independent are not."""


class CenterHitError(PluckxError):
    """The point lies in the center of projection, where the projection is undefined."""


class NotDecomposableError(PluckxError):
    """A multivector expected to be a Plücker vector is not decomposable."""


class DecomposableCenterError(PluckxError):
    """A center of projection meets the Grassmannian."""


class DegenerateFormError(PluckxError):
    """A 2-form expected to be symplectic has vanishing Pfaffian."""


class OrbitError(PluckxError):
    """A 3-form is not in the orbit an operation requires."""


class InconsistentStateError(PluckxError):
    """An internal invariant failed; this indicates a bug rather than bad input."""


class UnsupportedShapeError(PluckxError):
    """The (grade, dimension) pair is outside what the operation decides."""


class MalformedInputError(PluckxError):
    """A JSON document does not match the expected schema."""
