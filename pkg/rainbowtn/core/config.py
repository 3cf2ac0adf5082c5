"""Runtime limits shared by every cap-guarded operation."""

import logging
import os
import threading
from typing import Optional

from pydantic import BaseModel, Field

from . import constants


class RuntimeLimits(BaseModel):
    """Caps that turn runaway computations into ResourceCapError."""

    max_walks: int = Field(default=constants.DEFAULT_MAX_WALKS, ge=1)
    max_dimension: int = Field(default=constants.DEFAULT_MAX_DIMENSION, ge=1)
    max_frontier: int = Field(default=constants.DEFAULT_MAX_FRONTIER, ge=1)
    max_tiling_n: int = Field(default=constants.DEFAULT_MAX_TILING_N, ge=1)
    dense_eigensolver_dim: int = Field(
        default=constants.DEFAULT_DENSE_EIGENSOLVER_DIM, ge=1
    )

    @classmethod
    def from_env(cls) -> "RuntimeLimits":
        """
        Build limits from RAINBOWTN_* environment variables.

        Unset variables keep their defaults, e.g. RAINBOWTN_MAX_WALKS=5000.
        """
        overrides = {}
        for name in cls.model_fields:
            raw = os.getenv(f"{constants.ENV_PREFIX}{name.upper()}")
            if raw is not None and raw.strip():
                overrides[name] = int(raw)
        if overrides:
            logging.debug(f"Runtime limits from environment: {overrides}")
        return cls(**overrides)


_lock = threading.Lock()
_current: Optional[RuntimeLimits] = None


def get_limits() -> RuntimeLimits:
    global _current
    if _current is None:
        with _lock:
            if _current is None:
                _current = RuntimeLimits.from_env()
    return _current


def set_limits(limits: Optional[RuntimeLimits]) -> None:
    """Replace the process-wide limits; ``None`` re-reads the environment."""
    global _current
    with _lock:
        _current = limits


def resolve_limits(limits: Optional[RuntimeLimits]) -> RuntimeLimits:
    return limits if limits is not None else get_limits()
