"""Exception hierarchy."""


class BeltpolyError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(BeltpolyError, ValueError):
    """Operands live in spaces of different dimension."""


class PreconditionError(BeltpolyError, ValueError):
    """An input violates a documented precondition (rank, range, strictness)."""


class UnsupportedError(BeltpolyError, ValueError):
    """The request is outside the supported size range."""


class NotCertifiedError(BeltpolyError, RuntimeError):
    """A counting routine was called on a setup that failed certification."""


class NotAZonotopeError(BeltpolyError, ValueError):
    """Zonotope generators were requested for a non-zonotope."""


class IncompleteTableError(BeltpolyError, RuntimeError):
    """An angle-sum table is missing entries needed for a consistency check."""
