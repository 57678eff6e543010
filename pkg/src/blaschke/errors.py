"""Domain errors shared across the package."""


class InvalidParamsError(ValueError):
    """Map parameters violate a family invariant."""


class NoConvergenceError(RuntimeError):
    """Newton refinement exhausted its iteration cap."""

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class DerivativeVanishedError(RuntimeError):
    """Newton step undefined because the derivative vanished."""


class SeedCollisionError(RuntimeError):
    """Two asymptotic seeds refined to the same root."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class PreconditionError(RuntimeError):
    """A structural assumption failed at the given parameters.

    Signals that |lam| is at or beyond the usable threshold for this a, so
    downstream classification refuses to run rather than guess.
    """

    def __init__(self, check, details=""):
        super().__init__(f"precondition failed: {check}" + (f" ({details})" if details else ""))
        self.check = check
        self.details = details


class ContinuationBreakError(RuntimeError):
    """Root threading along a curve became ambiguous even after densifying."""


class RayInconclusiveError(RuntimeError):
    """Containment rays split 4-4."""


class BracketFailureError(RuntimeError):
    """A bisection bracket did not have the expected signs."""

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval
