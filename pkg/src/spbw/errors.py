"""Exception hierarchy shared by every module of the package."""


class SPBWError(Exception):
    """Base class for all errors raised deliberately by this package."""


class ValidationFailure(SPBWError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid presentation")


class DegreeBoundExceeded(SPBWError):
    pass


class UnverifiedInvolution(SPBWError):
    pass


class DimensionMismatch(SPBWError):
    pass


class PolySyntaxError(SPBWError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownVariable(PolySyntaxError):
    pass


class BoundExceeded(SPBWError):
    """A finite free resolution was not found within the length bound.

    The truncated resolution is kept on ``self.resolution`` so that callers
    can inspect it or resume with a larger bound.
    """

    def __init__(self, message, resolution=None):
        self.resolution = resolution
        super().__init__(message)


class NotFinite(SPBWError):
    pass


class InvalidSplitting(SPBWError):
    pass


class FoldFailed(SPBWError):
    def __init__(self, step):
        self.step = step
        super().__init__(f"no right inverse at fold step j={step}; module is not stably free")


class NotExact(SPBWError):
    pass


class InvalidStabilization(SPBWError):
    pass


class StabilizationFailed(SPBWError):
    def __init__(self, step):
        self.step = step
        super().__init__(
            f"no stabilizing coefficients found at step {step}; "
            "raise the degree bound or supply hints"
        )


class NotStablyFree(SPBWError):
    pass
