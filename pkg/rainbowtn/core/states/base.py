"""Ground states as sparse maps from walks to amplitudes."""

import logging
import math
from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple, Union

import numpy as np

from ..amplitudes import Amplitude, LogAmplitude, Monomial, XPolynomial
from ..config import RuntimeLimits, resolve_limits
from ..exceptions import DimensionMismatchError, InvalidParameterError, ResourceCapError
from ..schemas import ChainModel, ChainParams
from ..utils import log_method_call
from ..walks import Walk, enumerate_walks, height_profile


def walk_sort_key(walk: Walk) -> Tuple[Tuple[int, int], ...]:
    return tuple(step.sort_key for step in walk.steps)


def interior_area(walk: Walk) -> int:
    """Area of a walk already known to be valid."""
    return sum(height_profile(walk)[:-1])


class GroundState:
    """
    Sparse superposition sum_w amplitude(w) |w>.

    Amplitudes are stored unnormalized; ``normalized`` only changes what
    ``value`` and ``to_vector`` report. Exact states hold monomials in
    x = sqrt(t), float states hold LogAmplitudes.
    """

    def __init__(
        self,
        params: ChainParams,
        amplitudes: Dict[Walk, Amplitude],
        normalized: bool = False,
    ):
        self.params = params
        self.amplitudes = {
            w: a for w, a in amplitudes.items() if not _is_zero(a)
        }
        self.normalized = normalized
        self._norm_sq = None

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def j(self) -> int:
        return self.params.j

    @property
    def model(self) -> ChainModel:
        return self.params.model

    @property
    def t(self):
        return self.params.t

    @property
    def is_exact(self) -> bool:
        return self.params.is_exact

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __contains__(self, walk: Walk) -> bool:
        return self._key(walk) in self.amplitudes

    def __iter__(self) -> Iterator[Walk]:
        return iter(self.walks())

    def __repr__(self) -> str:
        return (
            f"GroundState(n={self.n}, j={self.j}, model={self.model.value}, "
            f"t={self.t}, walks={len(self)}, normalized={self.normalized})"
        )

    def _key(self, walk: Walk) -> Walk:
        return walk.retag(self.model, self.j)

    def walks(self) -> List[Walk]:
        """Support in lexicographic step order."""
        return sorted(self.amplitudes, key=walk_sort_key)

    def amplitude(self, walk: Walk) -> Amplitude:
        """Stored (unnormalized) amplitude, or an exact zero for absent walks."""
        stored = self.amplitudes.get(self._key(walk))
        if stored is not None:
            return stored
        return Monomial.zero() if self.is_exact else LogAmplitude.zero()

    def raw_value(self, walk: Walk) -> Union[Fraction, float]:
        self._require_concrete()
        return self.amplitude(walk).value_at(self.t)

    def norm_sq(self) -> Union[Fraction, float, XPolynomial]:
        """
        Sum of |amplitude|**2 over the support.

        A Fraction at rational t, an XPolynomial when t is symbolic and a
        float in float mode.
        """
        if self._norm_sq is None:
            if not self.is_exact:
                self._norm_sq = math.exp(self.log_norm_sq())
            elif self.t is None:
                total = XPolynomial()
                for a in self.amplitudes.values():
                    total = total + _symbolic_abs_sq(a)
                self._norm_sq = total
            else:
                self._norm_sq = sum(
                    (a.abs_sq_at(self.t) for a in self.amplitudes.values()),
                    Fraction(0),
                )
        return self._norm_sq

    def log_norm_sq(self) -> float:
        if not self.amplitudes:
            return -math.inf
        self._require_concrete()
        logs = np.array(
            [2.0 * _as_log(a, self.t).log_magnitude for a in self.amplitudes.values()]
        )
        return float(np.logaddexp.reduce(logs))

    def probability(self, walk: Walk) -> Union[Fraction, float]:
        """|amplitude(w)|**2 / N**2; exact at rational t."""
        self._require_concrete()
        a = self.amplitude(walk)
        if self.is_exact:
            return Fraction(a.abs_sq_at(self.t)) / self.norm_sq()
        if a.is_zero:
            return 0.0
        return math.exp(2.0 * a.log_magnitude - self.log_norm_sq())

    def probabilities(self) -> Dict[Walk, Union[Fraction, float]]:
        return {w: self.probability(w) for w in self.walks()}

    def value(self, walk: Walk) -> float:
        """Amplitude as a float, divided by N when the state is normalized."""
        self._require_concrete()
        a = _as_log(self.amplitude(walk), self.t)
        if a.is_zero:
            return 0.0
        if self.normalized:
            a = a.scaled(-0.5 * self.log_norm_sq())
        return a.value

    def normalize(self) -> "GroundState":
        return GroundState(self.params, dict(self.amplitudes), normalized=True)

    def restrict(self, keep: Callable[[Walk], bool]) -> "GroundState":
        """Sub-state on the walks accepted by ``keep``, original weights."""
        return GroundState(
            self.params,
            {w: a for w, a in self.amplitudes.items() if keep(w)},
            normalized=self.normalized,
        )

    def same_amplitudes(self, other: "GroundState") -> bool:
        """Exact equality of the stored amplitudes (symbolic in exact mode)."""
        if not self.params.same_chain(other.params):
            return False
        mine = {w.steps: a for w, a in self.amplitudes.items()}
        theirs = {w.steps: a for w, a in other.amplitudes.items()}
        return mine == theirs

    def to_vector(self, basis=None, limits: Optional[RuntimeLimits] = None) -> np.ndarray:
        """
        Dense vector over the local product basis, site 1 most significant.

        :param basis: LocalBasis; defaults to the model's basis for this j
        """
        from ..hamiltonian.basis import LocalBasis

        limits = resolve_limits(limits)
        if basis is None:
            basis = LocalBasis(self.j, self.model)
        dimension = basis.dimension ** self.params.length
        if dimension > limits.max_dimension:
            raise ResourceCapError(
                f"dense vector of dimension {dimension} exceeds max_dimension="
                f"{limits.max_dimension}"
            )
        vector = np.zeros(dimension)
        for walk in self.amplitudes:
            vector[basis.walk_index(walk)] = self.value(walk)
        return vector

    def _require_concrete(self) -> None:
        if self.t is None:
            raise InvalidParameterError("state is symbolic in t; give a concrete t")


def _is_zero(a: Amplitude) -> bool:
    if isinstance(a, XPolynomial):
        return not a.terms
    return a.is_zero


def _as_log(a: Amplitude, t) -> LogAmplitude:
    if isinstance(a, LogAmplitude):
        return a
    if isinstance(a, XPolynomial):
        return LogAmplitude.from_value(float(a.value_at(t)))
    return a.to_log(t)


def _symbolic_abs_sq(a: Amplitude) -> XPolynomial:
    if isinstance(a, Monomial):
        return XPolynomial.from_dict({2 * a.power: a.coefficient**2})
    return a * a


def _params(n, j, model, t, mode) -> ChainParams:
    return ChainParams(n=n, j=j, model=model, t=t, mode=mode)


@log_method_call()
def build_ground_state(
    n: int,
    j: int = 1,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    normalize: bool = False,
    mode: Any = None,
    limits: Optional[RuntimeLimits] = None,
) -> GroundState:
    """
    Enumerate the colored walks and weight each by t**A(w).

    :param t: Fraction, "p/q", float or None (symbolic, exact mode only)
    :param normalize: report values divided by N = sqrt(sum_w t**(2A(w)))
    :param mode: "exact" or "float"; inferred from t when omitted
    :return: GroundState
    """
    params = _params(n, j, model, t, mode)
    amplitudes: Dict[Walk, Amplitude] = {}
    log_t = None
    if not params.is_exact and params.t > 0:
        log_t = math.log(params.t)
    for walk in enumerate_walks(params.n, params.j, params.model, limits=limits):
        walk_area = interior_area(walk)
        if params.t == 0 and walk_area > 0:
            continue
        if params.is_exact:
            amplitudes[walk] = Monomial.x_power(2 * walk_area)
        else:
            amplitudes[walk] = LogAmplitude(
                1, walk_area * log_t if walk_area else 0.0
            )
    logging.debug(f"Ground state built with {len(amplitudes)} walks")
    return GroundState(params, amplitudes, normalized=normalize)


def amplitude(state: GroundState, walk: Walk) -> Amplitude:
    return state.amplitude(walk)


def fidelity(a: GroundState, b: GroundState) -> Union[Fraction, float]:
    """
    |<a|b>|**2 / (<a|a><b|b>).

    Exact when both states evaluate to rationals, float otherwise.

    :raises DimensionMismatchError: if the states live on different chains
    """
    if not a.params.same_chain(b.params):
        raise DimensionMismatchError(
            f"cannot compare states on (n={a.n}, j={a.j}, {a.model.value}) and "
            f"(n={b.n}, j={b.j}, {b.model.value})"
        )
    common = [w for w in a.amplitudes if w in b]
    if not common:
        return Fraction(0) if a.is_exact and b.is_exact else 0.0

    if a.is_exact and b.is_exact:
        values = [(a.raw_value(w), b.raw_value(w)) for w in common]
        if all(isinstance(x, Fraction) and isinstance(y, Fraction) for x, y in values):
            overlap = sum((x * y for x, y in values), Fraction(0))
            norm_a, norm_b = a.norm_sq(), b.norm_sq()
            if isinstance(norm_a, Fraction) and isinstance(norm_b, Fraction):
                return overlap * overlap / (norm_a * norm_b)

    a_unit, b_unit = a.normalize(), b.normalize()
    overlap = sum(a_unit.value(w) * b_unit.value(w) for w in common)
    return min(1.0, overlap * overlap)
