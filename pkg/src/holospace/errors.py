"""Exception types shared across the package.

Every failure mode that a contract names gets its own class so callers
can catch precisely.  All inherit from HolospaceError.
"""


class HolospaceError(Exception):
    """Base class for all package errors."""


class DegreeMismatchError(HolospaceError):
    """Two series with different truncation degrees were combined."""

    def __init__(self, n1, n2):
        super().__init__(f"truncation degrees differ: {n1} vs {n2}")
        self.degrees = (n1, n2)


class SingularInputError(HolospaceError):
    """An operation required a nonzero constant term and got zero."""


class DomainError(HolospaceError):
    """A numeric argument fell outside its admissible region."""


class PoleInDiskError(HolospaceError):
    """A linear fractional map has its pole inside the closed unit disk."""


class CertificationError(HolospaceError):
    """A symbol failed self-map certification required by the operation.

    Carries the offending sup-norm when known.
    """

    def __init__(self, message, sup_norm=None):
        super().__init__(message)
        self.sup_norm = sup_norm


class UnsupportedOperationError(HolospaceError):
    """The request is well formed but outside what this package computes."""


class NumericalFailureError(HolospaceError):
    """A dense decomposition failed to converge; carries diagnostics."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class PreconditionError(HolospaceError):
    """A check was invoked with parameters that cannot satisfy its contract."""
