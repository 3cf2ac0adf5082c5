"""
Color operator C and the two-point color correlation

    G(x1, x2) = <C_x1 C_x2> - <C_x1><C_x2>

for two colors. Only matched Up/Down pairs carry correlated colors, so G
equals the probability that x1 and x2 are matched; the transfer tables give
that probability without enumerating walks.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Union

from ..config import RuntimeLimits, resolve_limits
from ..exceptions import InvalidParameterError, ResourceCapError
from ..schemas import ChainModel, CorrelationRecord
from ..states import GroundState, matched_pair_weight, transfer_tables
from ..states.transfer import LogSemiring, chain_params
from ..utils import log_method_call
from ..walks import Step, StepKind, Walk, WalkRules
from .deficit import max_area_deficit

Value = Union[Fraction, float]


# red, blue
_COLOR_VALUES = {1: -1, 2: 1}


@dataclass(frozen=True)
class ColorOperatorSpec:
    """Eigenvalues of C: color 1 (red) is -1, color 2 (blue) is +1, flat is 0."""

    j: int = 2

    def __post_init__(self):
        if self.j != 2:
            raise InvalidParameterError(
                f"the color operator is defined for j = 2 only, got j={self.j}"
            )

    def color(self, step: Step) -> int:
        if step.kind == StepKind.flat:
            return 0
        return _COLOR_VALUES[step.color]


def _operator_for(state: GroundState) -> ColorOperatorSpec:
    return ColorOperatorSpec(j=state.j)


def _check_site(state: GroundState, x: int) -> None:
    if not 1 <= x <= state.params.length:
        raise InvalidParameterError(f"site {x} is outside 1..{state.params.length}")


def _check_pair(length: int, x1: int, x2: int) -> None:
    if not 1 <= x1 < x2 <= length:
        raise InvalidParameterError(f"need 1 <= x1 < x2 <= {length}, got ({x1}, {x2})")


def _check_dense_cap(state: GroundState, limits: RuntimeLimits) -> None:
    local = WalkRules(state.model).local_dimension(state.j)
    dimension = local**state.params.length
    if dimension > limits.max_dimension:
        raise ResourceCapError(
            f"brute-force correlation needs dimension {dimension} > max_dimension="
            f"{limits.max_dimension}"
        )


def _expectation(state: GroundState, weight) -> Value:
    """sum_w P(w) * weight(w), exact whenever the probabilities are."""
    total: Value = Fraction(0) if state.is_exact else 0.0
    for walk, p in state.probabilities().items():
        w = weight(walk)
        if w:
            total += p * w
    return total


def expectation_C(state: GroundState, x: int) -> Value:
    """
    <C_x> in the normalized state.

    :raises InvalidParameterError: if j != 2 or x is not a site
    """
    operator = _operator_for(state)
    _check_site(state, x)
    return _expectation(state, lambda w: operator.color(w[x - 1]))


@log_method_call()
def correlation_G(
    state: GroundState,
    x1: int,
    x2: int,
    limits: Optional[RuntimeLimits] = None,
) -> Value:
    """
    Connected color correlation by direct summation over the support.

    :raises ResourceCapError: if the dense Hilbert space exceeds ``max_dimension``
    """
    operator = _operator_for(state)
    _check_site(state, x1)
    _check_site(state, x2)
    if x1 >= x2:
        raise InvalidParameterError(f"need x1 < x2, got ({x1}, {x2})")
    _check_dense_cap(state, resolve_limits(limits))

    def product(walk: Walk) -> int:
        return operator.color(walk[x1 - 1]) * operator.color(walk[x2 - 1])

    both = _expectation(state, product)
    first = expectation_C(state, x1)
    second = expectation_C(state, x2)
    return both - first * second


def matched_probability(
    n: int,
    j: int,
    model: ChainModel,
    t: Any,
    x1: int,
    x2: int,
    mode: Any = None,
) -> Value:
    """
    Probability that sites x1 < x2 form a matched Up/Down pair.

    Exact at rational t (a Fraction), a float otherwise; the ratio is taken in
    the log domain so large t cannot overflow.
    """
    params = chain_params(n, j, model, t, mode)
    if params.t is None or params.t <= 0:
        raise InvalidParameterError("matched_probability needs t > 0")
    _check_pair(params.length, x1, x2)
    tables = transfer_tables(params)
    weight = matched_pair_weight(tables, x1, x2)
    if isinstance(tables.semiring, LogSemiring):
        if weight == -math.inf:
            return 0.0
        return math.exp(weight - tables.partition())
    return Fraction(weight) / tables.partition()


def log_matched_probability(
    n: int, j: int, model: ChainModel, t: Any, x1: int, x2: int
) -> float:
    """Natural log of ``matched_probability`` in float mode; -inf if unmatchable."""
    params = chain_params(n, j, model, t, "float")
    if params.t <= 0:
        raise InvalidParameterError("log_matched_probability needs t > 0")
    _check_pair(params.length, x1, x2)
    tables = transfer_tables(params)
    weight = matched_pair_weight(tables, x1, x2)
    if weight == -math.inf:
        return -math.inf
    return weight - tables.partition()


@log_method_call()
def correlation_records(
    n: int,
    j: int = 2,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    mode: Any = None,
) -> List[CorrelationRecord]:
    """
    One record per pair x1 < x2 with G from the matched-pair identity and the
    large-t area deficit. Unmatchable pairs carry no deficit.
    """
    params = chain_params(n, j, model, t, mode)
    records = []
    for x1 in range(1, params.length + 1):
        for x2 in range(x1 + 1, params.length + 1):
            probability = float(
                matched_probability(n, j, params.model, params.t, x1, x2, params.mode)
            )
            deficit = max_area_deficit(n, params.model, x1, x2)
            records.append(
                CorrelationRecord(
                    x1=x1,
                    x2=x2,
                    t=params.t,
                    n=n,
                    value=probability,
                    matched_probability=probability,
                    area_deficit=None if math.isinf(deficit) else deficit,
                )
            )
    logging.info(f"Computed {len(records)} correlation records for n={n}, j={j}")
    return records


def exponent_fit(
    n: int,
    j: int,
    t: Any,
    x1: int,
    x2: int,
    model: ChainModel = ChainModel.motzkin,
) -> float:
    """
    -ln G / ln t, which tends to twice the area deficit as t grows.

    :raises InvalidParameterError: if t <= 1 or the pair is never matched
    """
    t = float(t)
    if t <= 1:
        raise InvalidParameterError(f"exponent_fit needs t > 1, got {t}")
    log_g = log_matched_probability(n, j, model, t, x1, x2)
    if log_g == -math.inf:
        raise InvalidParameterError(f"G vanishes for the pair ({x1}, {x2})")
    return -log_g / math.log(t)
