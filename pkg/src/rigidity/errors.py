"""Exception hierarchy shared across the package.

Validation errors mean the caller handed us bad data; numerical errors mean
an iteration failed to meet its accuracy contract.  The CLI maps the former
to exit code 2 and the latter to exit code 3.
"""


class RigidityError(Exception):
    """Base class for all package errors."""


class ValidationError(RigidityError):
    """Input violates a documented precondition or invariant."""


class SymmetryError(ValidationError):
    """Matrix is not symmetric within the mode's tolerance."""


class DimensionMismatchError(ValidationError):
    """Operands have incompatible dimensions."""


class UnsupportedDimensionError(ValidationError):
    """Operation is only defined for a restricted set of dimensions."""


class ModeMixError(ValidationError):
    """Exact and floating-point scalars mixed in one value."""


class NonMinimalSpecError(ValidationError):
    """Hypersurface spec fails its minimality condition."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class DegenerateDirectionError(ValidationError):
    """Vector projects to (numerically) zero on the constraint sphere."""


class NumericalError(RigidityError):
    """A numerical procedure failed to converge or lost accuracy."""


class ConvergenceError(NumericalError):
    """Iteration cap reached before the accuracy target."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IntegrationBlowupError(NumericalError):
    """ODE step produced a non-finite state.

    Carries the last valid axial coordinate and every state integrated
    before the failure.
    """

    def __init__(self, message, last_valid_z, states):
        super().__init__(message)
        self.last_valid_z = last_valid_z
        self.states = states
