"""Exception types raised by the library."""


class ZetaDeltaError(Exception):
    """Base class for library-specific failures."""


class PoleError(ZetaDeltaError, ValueError):
    """Evaluation requested exactly at a pole of the function."""


class DomainError(ZetaDeltaError, ValueError):
    """Argument outside the domain an operation supports."""


class NoSolutionError(ZetaDeltaError, ValueError):
    """Branch index below the admissible range of the phase equation."""


class ConvergenceError(ZetaDeltaError, RuntimeError):
    """Newton refinement failed to reach the residual tolerance."""


class DriftError(ConvergenceError):
    """Newton refinement converged, but away from the seeded branch."""


class QuadratureError(ZetaDeltaError, RuntimeError):
    """Contour integration did not stabilize near an integer winding."""
