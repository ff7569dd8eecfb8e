"""Exception hierarchy shared across the package."""

from __future__ import annotations


class BraidlinkError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(BraidlinkError):
    """A braid failed structural or separation validation."""

    def __init__(self, message: str, sample: int | None = None,
                 strands: tuple[int, int] | None = None):
        super().__init__(message)
        self.sample = sample
        self.strands = strands


class BaseMismatchError(ValidationError):
    """Two braids cannot be composed: their base configurations differ."""


class WordSyntaxError(BraidlinkError):
    """A braid or loop word failed to parse."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class NonPureWordError(BraidlinkError):
    """An Artin word induces a non-identity strand permutation."""

    def __init__(self, message: str, permutation=None):
        super().__init__(message)
        self.permutation = permutation


class NormalizationError(BraidlinkError):
    """The normalized strand-4 curve is too close to a degenerate configuration."""

    def __init__(self, message: str, sample: int | None = None):
        super().__init__(message)
        self.sample = sample


class BranchTrackingError(BraidlinkError):
    """Accumulated winding drifted away from an integer; branch density broken."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class ConvergenceError(BraidlinkError):
    """A quadrature refinement or integrality assertion failed."""

    def __init__(self, message: str, values: tuple[float, ...] = ()):
        super().__init__(message)
        self.values = values


class GateError(BraidlinkError):
    """An operation requiring zero total linking was called on a braid without it."""


class ConsistencyError(BraidlinkError):
    """Two independent computation routes disagreed on a value they must share."""


class DegenerateSampleError(BraidlinkError):
    """A randomly generated braid sample carries no usable linking data."""
