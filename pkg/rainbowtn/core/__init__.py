from .config import RuntimeLimits, get_limits, set_limits
from .exceptions import RainbowError
from .network import contract
from .schemas import ArithmeticMode, ChainModel, ChainParams
from .states import GroundState, build_ground_state
from .walks import parse_walk

__all__ = [
    "RuntimeLimits",
    "get_limits",
    "set_limits",
    "RainbowError",
    "ArithmeticMode",
    "ChainModel",
    "ChainParams",
    "GroundState",
    "build_ground_state",
    "contract",
    "parse_walk",
]
