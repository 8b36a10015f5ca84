"""Exceptions raised by srreg.

Every error derives from ``ValueError`` so callers that only care about bad
input can keep catching that.
"""

from typing import Optional


class SrregError(ValueError):
    """Base class for all srreg errors."""


class DimensionMismatchError(SrregError):
    """Exponent length differs from the ambient variable count."""


class IdealError(SrregError):
    """Zero, unit or non-squarefree ideal where the operation forbids it."""


class ComplexError(SrregError):
    """Void complex, missing face or dimension outside the supported range."""


class GraphError(SrregError):
    """Edgeless graph, out-of-range vertex or dependent vertex set."""


class InputFormatError(SrregError):
    """Malformed JSON, monomial text or complex text."""


class GuardLimitError(SrregError):
    """A configured size guard would be exceeded.

    Attributes:
        estimate: The size the operation would have needed.
        limit: The configured limit.
    """

    def __init__(self, message: str, estimate: Optional[int] = None, limit: Optional[int] = None):
        super().__init__(message)
        self.estimate = estimate
        self.limit = limit
