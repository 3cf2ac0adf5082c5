"""
Pydantic models for parameter validation and for the reports returned by
the verification operations.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from . import constants
from .utils import as_exact, parse_t


class ChainModel(str, Enum):
    """Enum for the supported walk families."""

    motzkin = "motzkin"
    fredkin = "fredkin"


class ArithmeticMode(str, Enum):
    """Exact rationals/monomials in x = sqrt(t), or log-domain floats."""

    exact = "exact"
    float = "float"


class TruncationWindow(str, Enum):
    small_t = "small_t"
    large_t = "large_t"


class CutRule(str, Enum):
    half = "half"
    all = "all"


class ChainParams(BaseModel):
    """
    Parameters shared by every chain-level operation.

    ``t`` may be a Fraction, int, float or a "p/q" / decimal string. When
    ``mode`` is omitted it is inferred: rationals select exact mode, floats
    select float mode. ``t=None`` is allowed in exact mode only and keeps
    results symbolic in x = sqrt(t).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(ge=1)
    j: int = Field(default=1, ge=1)
    model: ChainModel = ChainModel.motzkin
    t: Optional[Union[Fraction, float]] = None
    mode: Optional[ArithmeticMode] = None

    @model_validator(mode="before")
    @classmethod
    def _resolve_t_and_mode(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        t = parse_t(data.get("t"))
        mode = data.get("mode")
        if mode is not None:
            mode = ArithmeticMode(mode)
        if mode is None:
            mode = ArithmeticMode.float if isinstance(t, float) else ArithmeticMode.exact
        if t is not None:
            t = as_exact(t) if mode == ArithmeticMode.exact else float(t)
        elif mode == ArithmeticMode.float:
            raise ValueError("float mode needs a concrete value of t")
        data["t"] = t
        data["mode"] = mode
        return data

    @model_validator(mode="after")
    def _check_domain(self) -> "ChainParams":
        if self.t is not None:
            if self.t < 0:
                raise ValueError("t must be non-negative")
            if self.t == 0 and self.model == ChainModel.fredkin:
                raise ValueError(
                    "t = 0 is degenerate for the Fredkin chain (no zero-area walk)"
                )
        return self

    @property
    def length(self) -> int:
        return 2 * self.n

    @property
    def is_exact(self) -> bool:
        return self.mode == ArithmeticMode.exact

    def with_t(self, t: Any) -> "ChainParams":
        return ChainParams(n=self.n, j=self.j, model=self.model, t=t, mode=self.mode)

    def same_chain(self, other: "ChainParams") -> bool:
        return (self.n, self.j, self.model) == (other.n, other.j, other.model)


class Violation(BaseModel):
    """A single broken walk rule (1-based step position)."""

    kind: str
    position: int
    message: str


class ValidityReport(BaseModel):
    violations: List[Violation] = Field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]


class TilingCheck(BaseModel):
    valid: bool
    violation: Optional[str] = None


class TermResidual(BaseModel):
    label: str
    family: str
    sites: Tuple[int, ...]
    value: float


class FrustrationReport(BaseModel):
    residuals: List[TermResidual]
    tolerance: float

    @property
    def max_residual(self) -> float:
        return max((r.value for r in self.residuals), default=0.0)

    @property
    def frustration_free(self) -> bool:
        return self.max_residual <= self.tolerance


class SpectrumSummary(BaseModel):
    lambda_min: float
    kernel_dimension: int
    lowest: List[float]
    solvers: Dict[str, int]


class CorrelationRecord(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    x1: int
    x2: int
    t: Union[Fraction, float]
    n: int
    value: float
    matched_probability: float
    area_deficit: Optional[float] = None


class DeficitEntry(BaseModel):
    x1: int
    x2: int
    deficit: float
    law: float
    matches: bool


class DeficitLawReport(BaseModel):
    n: int
    entries: List[DeficitEntry]

    @property
    def matches(self) -> List[DeficitEntry]:
        return [e for e in self.entries if e.matches]

    @property
    def exceptions(self) -> List[DeficitEntry]:
        return [e for e in self.entries if not e.matches]


class SweepPoint(BaseModel):
    """One grid point of a parameter sweep."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    model: ChainModel = ChainModel.motzkin
    n: int = Field(ge=1)
    j: int = Field(default=1, ge=1)
    t: Union[Fraction, float]
    mode: ArithmeticMode = ArithmeticMode.float

    def params(self) -> ChainParams:
        return ChainParams(n=self.n, j=self.j, model=self.model, t=self.t, mode=self.mode)


class SweepRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    model: ChainModel
    n: int
    j: int
    t: Union[Fraction, float]
    cut: int
    quantity: str
    value: Optional[float] = None
    mode: ArithmeticMode
    error: Optional[str] = None


class JobConfig(BaseModel):
    """Validated command-line job; built before any subcommand runs."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    subcommand: str
    model: ChainModel = ChainModel.motzkin
    n: int = Field(default=2, ge=1)
    j: int = Field(default=1, ge=1)
    t: Optional[Union[Fraction, float]] = None
    t_grid: Optional[List[Union[Fraction, float]]] = None
    cut: CutRule = CutRule.half
    mode: Optional[ArithmeticMode] = None
    window: TruncationWindow = TruncationWindow.small_t
    target: Literal["walk", "arcs", "tiling"] = "walk"
    walk: Optional[str] = None
    out: Optional[str] = None
    snapshot: Optional[str] = None
    max_dimension: Optional[int] = Field(default=None, ge=1)
    max_walks: Optional[int] = Field(default=None, ge=1)
    count: bool = False
    bits: bool = False
    provenance: bool = False

    @field_validator("subcommand")
    @classmethod
    def validate_subcommand(cls, v):
        if v not in constants.SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {v!r}")
        return v

    @field_validator("t", mode="before")
    @classmethod
    def validate_t(cls, v):
        t = parse_t(v)
        if t is not None and t < 0:
            raise ValueError("t must be non-negative")
        return t

    @field_validator("t_grid", mode="before")
    @classmethod
    def validate_t_grid(cls, v):
        # Convert comma-separated string to list
        if v is None:
            return None
        if isinstance(v, str):
            v = [item for item in v.split(",") if item.strip()]
        values = [parse_t(item) for item in v]
        if not values:
            raise ValueError("t-grid is empty")
        if any(value <= 0 for value in values):
            raise ValueError("t-grid values must be strictly positive")
        return values

    def t_values(self) -> List[Union[Fraction, float]]:
        if self.t_grid is not None:
            return list(self.t_grid)
        if self.t is None:
            raise ValueError("give --t or --t-grid")
        return [self.t]
