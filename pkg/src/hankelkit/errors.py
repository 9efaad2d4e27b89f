"""Errors raised across the library."""


class HankelkitError(Exception):
    """Base class for every error this package raises on purpose."""


class IndexBeyondKnownMoments(HankelkitError):
    """A moment index past the end of a finite sequence was requested."""


class NotSquare(HankelkitError):
    """Determinant requested for a non-square matrix."""


class SizeCapExceeded(HankelkitError):
    """Requested size is beyond the hard cap of the chosen algorithm."""


class SpecOutOfRange(HankelkitError):
    """Determinant parameters (j, a, b) outside the range where the matrix exists."""


class IndexOutOfRange(HankelkitError):
    """Coefficient index outside the valid 0..n range."""


class HankelSingular(HankelkitError):
    """A leading Hankel determinant vanishes, so the division it feeds is undefined."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"Hankel determinant of order {order} is zero")


class DenominatorVanishes(HankelkitError):
    """A determinant appearing in a denominator evaluates to zero."""

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"{which} is zero")


class TraceUndefined(HankelkitError):
    """A reduction step would divide by a vanishing determinant."""

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"{which} is zero; reduction step undefined")
