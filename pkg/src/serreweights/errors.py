"""Exception hierarchy.

``ValidationError`` covers malformed or unsupported input (CLI exit 2);
``DomainError`` covers well-formed input that is mathematically rejected
(CLI exit 3).
"""


class SerreWeightError(Exception):
    pass


class ValidationError(SerreWeightError, ValueError):
    pass


class UnsupportedPlaceError(ValidationError):
    """The operation is only defined for a restricted class of places."""


class DomainError(SerreWeightError):
    pass


class NotIrreducibleError(DomainError):
    """A niveau-2 exponent n with (q+1) | n, i.e. phi^q == phi."""


class NonIntegralConductorError(DomainError):
    pass


class TruncationError(DomainError):
    pass


class DecompositionError(DomainError):
    """A class function is not an integral combination of irreducibles."""
