"""Exception hierarchy.

Errors split into two families that the CLI maps to distinct exit codes:
``UserError`` (bad input, exit 1) and ``DomainError`` (the mathematics says
no, or the numerics failed, exit 2).
"""


class FrameOrbitError(Exception):
    """Base class for all package errors."""


class UserError(FrameOrbitError):
    """Malformed input or parameters outside an operation's contract."""


class DomainError(FrameOrbitError):
    """A numerical or mathematical precondition does not hold."""


class DimensionMismatch(UserError):
    pass


class InvalidParams(UserError):
    pass


class FrameFormatError(UserError):
    """Malformed frame / parameter JSON; the message names the field."""


class TooLarge(UserError):
    pass


class WindowedModelUnsupported(UserError):
    pass


class BandsNotCovering(UserError):
    pass


class NotHermitian(DomainError):
    pass


class NumericalFailure(DomainError):
    pass


class NotPositiveDefinite(DomainError):
    def __init__(self, message, margin=None):
        super().__init__(message)
        self.margin = margin


class NotAFrame(DomainError):
    def __init__(self, message="vectors do not span the ambient space", margin=None):
        super().__init__(message)
        self.margin = margin


class NoExactSolution(DomainError):
    def __init__(self, residual, message=None):
        super().__init__(message or f"no exact solution (residual {residual:.3e})")
        self.residual = residual


class SingularGenerator(DomainError):
    pass


class SingularOperator(DomainError):
    pass


class NotCyclic(DomainError):
    def __init__(self, residual):
        super().__init__(f"T^M f0 != f0 (relative residual {residual:.3e})")
        self.residual = residual


class WindowVanishes(DomainError):
    pass


class NotUnitary(UserError):
    pass
