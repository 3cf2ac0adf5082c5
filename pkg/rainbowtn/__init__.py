"""rainbowtn - exact rainbow tensor networks for colored Motzkin and Fredkin chains."""

from .core import (
    ChainModel,
    ChainParams,
    GroundState,
    RainbowError,
    RuntimeLimits,
    build_ground_state,
    contract,
    parse_walk,
)

# Get version from package metadata
try:
    import importlib.metadata as _importlib_metadata
except ImportError:  # Python < 3.8
    import importlib_metadata as _importlib_metadata  # type: ignore[no-redef]

try:
    __version__ = _importlib_metadata.version("rainbowtn")
except Exception:
    __version__ = "unknown"

__all__ = [
    "__version__",
    "ChainModel",
    "ChainParams",
    "GroundState",
    "RainbowError",
    "RuntimeLimits",
    "build_ground_state",
    "contract",
    "parse_walk",
]
