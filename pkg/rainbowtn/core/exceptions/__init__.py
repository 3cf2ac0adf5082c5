# rainbowtn/core/exceptions/__init__.py


class RainbowError(Exception):
    """Base exception for rainbowtn errors."""

    pass


class InvalidWalkError(RainbowError):
    """Raised for malformed walk text or walks that violate the walk rules."""

    pass


class InvalidTilingError(RainbowError):
    """Raised when a tiling breaks edge matching or the boundary rules."""

    pass


class InvalidParameterError(RainbowError):
    """Raised for out-of-range cuts, sites, heights or unsupported settings."""

    pass


class ResourceCapError(RainbowError):
    """Raised when a computation would exceed a configured runtime cap."""

    pass


class ModelMismatchError(RainbowError):
    pass


class DimensionMismatchError(RainbowError):
    pass


class ConvergenceError(RainbowError):
    pass
