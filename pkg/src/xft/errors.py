"""Exception types shared across the library."""


class XftError(Exception):
    """Base class for all library errors."""


class InvalidSizeError(XftError):
    """Empty input, or input lengths that do not match."""


class NonFiniteSignalError(XftError):
    """Signal construction saw NaN or Inf samples."""


class ConvergenceFailure(XftError):
    """Iterative refinement did not reach the requested tolerance."""

    def __init__(self, message: str, worst_residual: float):
        super().__init__(f"{message} (worst residual {worst_residual:.3e})")
        self.worst_residual = worst_residual


class CapabilityError(XftError):
    """Requested size exceeds what the dense path supports; use the fast path."""


class OutOfDomainError(XftError):
    """Transform parameter z lies outside the closed unit disk."""


class SingularParameterError(XftError):
    """z too close to +-1: the kernel prefactor and exponents blow up."""


class AbsentScalingError(XftError):
    """The output scaling a = 2i(1-z^2)/(pi z) is undefined (z = 0)."""


class NoClosedFormError(XftError):
    """The corpus has no reference transform for this (signal, z) pair."""


class SignalSpecError(XftError):
    """Unknown corpus signal name, or missing/invalid parameters."""


class InputParseError(XftError):
    """Malformed signal input file."""


class ComplexAbscissaeError(XftError):
    """Operation requires real evaluation abscissae (boundary z only)."""
