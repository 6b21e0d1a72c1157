"""Exception types shared across the solver modules."""


class ReswellError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ReswellError, ValueError):
    """An argument lies outside the operation's domain."""


class NoSignChange(ReswellError):
    """A bracketing root find was given endpoints of equal sign."""


class NonFinite(ReswellError):
    """A function evaluated to NaN or infinity inside a bracket."""


class NoConvergence(ReswellError):
    """An iterative solver exhausted its iteration budget."""


class SingularJacobian(ReswellError):
    """The finite-difference Jacobian is numerically rank deficient."""


class NotExceptional(ReswellError):
    """A well depth fails the exceptional-point condition."""


class FitFailed(ReswellError):
    """A resonance-width fit window left the physical domain."""


class NoInvertibleIntertwiner(ReswellError):
    """No invertible intertwiner exists in the computed kernel."""


class BoundaryLeak(ReswellError):
    """A grid eigenfunction has non-negligible boundary amplitude."""


class ValidationError(ReswellError, ValueError):
    """A CLI/config parameter violates a module precondition."""
