"""Exception types shared across the package."""


class DomAtlasError(Exception):
    """Base class for all package errors."""


class MalformedGraph6(DomAtlasError):
    """Input is not a well-formed single-byte graph6 string."""


class EmptySet(DomAtlasError):
    """An operation required a nonempty vertex set."""


class OrderTooLarge(DomAtlasError):
    """Graph order exceeds the configured cap for this operation."""


class ArithmeticOverflow(DomAtlasError):
    """A polynomial coefficient exceeded the 64-bit unsigned range."""


class InvalidFamilyOrder(DomAtlasError):
    """Requested order is invalid for the named graph family."""


class NoConvergence(DomAtlasError):
    """Root iteration did not converge within the iteration budget.

    Carries the best iterate and its residuals so callers can inspect
    partial results instead of losing them.
    """

    def __init__(self, message, roots=None, residuals=None):
        super().__init__(message)
        self.roots = list(roots) if roots is not None else []
        self.residuals = list(residuals) if residuals is not None else []
