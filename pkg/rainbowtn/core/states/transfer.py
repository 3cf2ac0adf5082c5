"""
Transfer dynamic programming over (position, height).

Left partial L[z][h] sums, over prefixes of length z ending at height h, the
weight prod_i t**(2*h_i) times j per closed pair. Right partial R[z][h] does
the same for suffixes that start at height h after cut z. Colors of the h
pairs open across a cut are counted once, as j**h, when the two are joined:

    Z = sum_h j**h * L[z][h] * R[z][h]        for every z.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..amplitudes import LogAmplitude, XPolynomial
from ..exceptions import InvalidParameterError
from ..schemas import ChainModel, ChainParams
from ..utils import log_method_call
from ..walks import WalkRules

# exp() of anything above this overflows a double
_LOG_OVERFLOW = 700.0


class ExactSemiring:
    """Rational arithmetic at a concrete t; 0**0 = 1."""

    def __init__(self, t: Fraction):
        self.t = t
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def t_power(self, power: int):
        return self.t**power

    def count(self, k: int):
        return Fraction(k)


class SymbolicSemiring:
    """Polynomials in x = sqrt(t); t**p is x**(2p)."""

    def __init__(self):
        self.zero = XPolynomial()
        self.one = XPolynomial.from_dict({0: Fraction(1)})

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def t_power(self, power: int):
        return XPolynomial.from_dict({2 * power: Fraction(1)})

    def count(self, k: int):
        return XPolynomial.from_dict({0: Fraction(k)})


class LogSemiring:
    """Natural-log weights; addition is log-sum-exp."""

    def __init__(self, t: float):
        self.t = float(t)
        self.log_t = math.log(self.t) if self.t > 0 else -math.inf
        self.zero = -math.inf
        self.one = 0.0

    def add(self, a, b):
        if a == -math.inf:
            return b
        if b == -math.inf:
            return a
        return float(np.logaddexp(a, b))

    def mul(self, a, b):
        if a == -math.inf or b == -math.inf:
            return -math.inf
        return a + b

    def t_power(self, power: int):
        if power == 0:
            return 0.0
        return power * self.log_t

    def count(self, k: int):
        return math.log(k) if k > 0 else -math.inf


class MaxPlusSemiring:
    """Tropical weights: the largest area instead of the sum of t**(2A)."""

    zero = -math.inf
    one = 0

    def add(self, a, b):
        return max(a, b)

    def mul(self, a, b):
        if a == -math.inf or b == -math.inf:
            return -math.inf
        return a + b

    def t_power(self, power: int):
        # t**(2h) stands for h units of area
        return power // 2

    def count(self, k: int):
        return 0


Semiring = Union[ExactSemiring, SymbolicSemiring, LogSemiring, MaxPlusSemiring]


def semiring_for(params: ChainParams) -> Semiring:
    if not params.is_exact:
        return LogSemiring(params.t)
    if params.t is None:
        return SymbolicSemiring()
    return ExactSemiring(params.t)


def _get(row: Sequence, h: int, zero):
    return row[h] if 0 <= h < len(row) else zero


def left_partials(semiring: Semiring, length: int, j: int, allows_flat: bool) -> List[list]:
    """Rows L[0..length]; row z holds heights 0..min(z, length - z)."""
    rows = [[semiring.one]]
    color = semiring.count(j)
    for z in range(1, length + 1):
        prev = rows[-1]
        top = min(z, length - z)
        row = []
        for h in range(top + 1):
            total = _get(prev, h - 1, semiring.zero)
            if allows_flat:
                total = semiring.add(total, _get(prev, h, semiring.zero))
            total = semiring.add(
                total, semiring.mul(color, _get(prev, h + 1, semiring.zero))
            )
            row.append(semiring.mul(total, semiring.t_power(2 * h)))
        rows.append(row)
    return rows


def right_partials(semiring: Semiring, length: int, j: int, allows_flat: bool) -> List[list]:
    """Rows R[0..length]; R[length] = [1]."""
    rows: List[list] = [[] for _ in range(length + 1)]
    rows[length] = [semiring.one]
    color = semiring.count(j)
    for z in range(length - 1, -1, -1):
        nxt = rows[z + 1]
        top = min(z, length - z)
        row = []
        for h in range(top + 1):
            up = semiring.mul(
                semiring.mul(color, semiring.t_power(2 * (h + 1))),
                _get(nxt, h + 1, semiring.zero),
            )
            total = up
            if allows_flat:
                total = semiring.add(
                    total,
                    semiring.mul(semiring.t_power(2 * h), _get(nxt, h, semiring.zero)),
                )
            if h >= 1:
                total = semiring.add(
                    total,
                    semiring.mul(
                        semiring.t_power(2 * (h - 1)), _get(nxt, h - 1, semiring.zero)
                    ),
                )
            row.append(total)
        rows[z] = row
    return rows


@dataclass(frozen=True)
class TransferTables:
    """Left/right partial sums of one chain, shared by every cut."""

    params: ChainParams
    semiring: Any
    left: Tuple[tuple, ...]
    right: Tuple[tuple, ...]

    @property
    def length(self) -> int:
        return self.params.length

    def open_weight(self, h: int):
        """j**h colorings of the pairs open across a cut."""
        return _power(self.semiring, self.semiring.count(self.params.j), h)

    def cut_weights(self, z: int) -> list:
        """Unnormalized weights j**h * L[z][h] * R[z][h], h = 0..min(z, 2n-z)."""
        s = self.semiring
        left, right = self.left[z], self.right[z]
        return [
            s.mul(self.open_weight(h), s.mul(left[h], right[h]))
            for h in range(min(len(left), len(right)))
        ]

    def partition(self):
        return self.left[self.length][0]


def _power(semiring: Semiring, base, exponent: int):
    result = semiring.one
    for _ in range(exponent):
        result = semiring.mul(result, base)
    return result


@lru_cache(maxsize=64)
def transfer_tables(params: ChainParams) -> TransferTables:
    rules = WalkRules(params.model)
    semiring = semiring_for(params)
    left = left_partials(semiring, params.length, params.j, rules.allows_flat)
    right = right_partials(semiring, params.length, params.j, rules.allows_flat)
    return TransferTables(
        params=params,
        semiring=semiring,
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
    )


@lru_cache(maxsize=64)
def max_area_tables(n: int, model: ChainModel = ChainModel.motzkin) -> TransferTables:
    """Partials holding the largest prefix/suffix areas instead of weight sums."""
    params = ChainParams(n=n, j=1, model=model)
    rules = WalkRules(params.model)
    semiring = MaxPlusSemiring()
    left = left_partials(semiring, params.length, 1, rules.allows_flat)
    right = right_partials(semiring, params.length, 1, rules.allows_flat)
    return TransferTables(
        params=params,
        semiring=semiring,
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
    )


def chain_partition(semiring: Semiring, length: int, j: int, allows_flat: bool):
    """Partition function of a chain of any length (odd lengths give zero for Fredkin)."""
    if length == 0:
        return semiring.one
    return left_partials(semiring, length, j, allows_flat)[length][0]


def chain_params(
    n: int,
    j: int = 1,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    mode: Any = None,
) -> ChainParams:
    return ChainParams(n=n, j=j, model=model, t=t, mode=mode)


@dataclass(frozen=True)
class CutSpectrum:
    """
    Distribution of the stack height across cut z.

    ``probabilities[h]`` is P_h; each of the j**h stacks of height h is a
    Schmidt value P_h / j**h.
    """

    z: int
    j: int
    probabilities: Tuple[Union[Fraction, float], ...]

    def stack_probability(self, h: int) -> Union[Fraction, float]:
        p = self.probabilities[h]
        if isinstance(p, Fraction):
            return p / Fraction(self.j) ** h
        return p / float(self.j) ** h

    @property
    def mean_height(self) -> float:
        return float(sum(h * p for h, p in enumerate(self.probabilities)))

    def entropy(self) -> float:
        """-sum P ln P + <h> ln j, in nats."""
        entropy = 0.0
        for p in self.probabilities:
            p = float(p)
            if p > 0:
                entropy -= p * math.log(p)
        return entropy + self.mean_height * math.log(self.j)

    def schmidt_values(self) -> List[float]:
        """All Schmidt probabilities, descending."""
        values = []
        for h, p in enumerate(self.probabilities):
            if p:
                values.extend([float(self.stack_probability(h))] * self.j**h)
        return sorted(values, reverse=True)


def _require_concrete(params: ChainParams) -> None:
    if params.t is None:
        raise InvalidParameterError("a concrete value of t is needed here")


def _check_cut(params: ChainParams, z: int) -> None:
    if not 1 <= z <= params.length - 1:
        raise InvalidParameterError(f"cut {z} is outside 1..{params.length - 1}")


def _spectrum(tables: TransferTables, z: int) -> CutSpectrum:
    weights = tables.cut_weights(z)
    total = tables.partition()
    if isinstance(tables.semiring, LogSemiring):
        probabilities = tuple(
            0.0 if w == -math.inf else math.exp(w - total) for w in weights
        )
    else:
        probabilities = tuple(Fraction(w) / total for w in weights)
    return CutSpectrum(z=z, j=tables.params.j, probabilities=probabilities)


@log_method_call()
def norm_sq(
    n: int,
    j: int = 1,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    mode: Any = None,
):
    """
    N**2 = sum_w t**(2 A(w)) over colored walks.

    Exact mode returns a Fraction, or an XPolynomial in x = sqrt(t) when t is
    omitted. Float mode returns a float, promoted to a LogAmplitude when the
    value would overflow.
    """
    params = chain_params(n, j, model, t, mode)
    value = transfer_tables(params).partition()
    if params.is_exact:
        return value
    if value > _LOG_OVERFLOW:
        logging.info(
            f"norm_sq overflows a double (ln N^2 = {value:.6g}); returning log-domain value"
        )
        return LogAmplitude(1, value)
    return math.exp(value)


def log_norm_sq(
    n: int,
    j: int = 1,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
) -> float:
    params = chain_params(n, j, model, t, "float")
    return transfer_tables(params).partition()


def cut_distribution(
    n: int,
    j: int,
    model: ChainModel,
    t: Any,
    z: int,
    mode: Any = None,
) -> CutSpectrum:
    """
    Stack-height distribution P_h across cut z.

    :param z: cut between sites z and z+1, 1 <= z <= 2n-1
    """
    params = chain_params(n, j, model, t, mode)
    _require_concrete(params)
    _check_cut(params, z)
    return _spectrum(transfer_tables(params), z)


def entanglement_entropy(
    n: int,
    j: int,
    model: ChainModel,
    t: Any,
    z: Optional[int] = None,
    mode: Any = None,
) -> float:
    """Von Neumann entropy in nats of sites 1..z; ``z`` defaults to the half chain."""
    if z is None:
        z = n
    return cut_distribution(n, j, model, t, z, mode).entropy()


@log_method_call()
def entropy_profile(
    n: int,
    j: int,
    model: ChainModel,
    t: Any,
    mode: Any = None,
) -> List[float]:
    """S(z) for z = 1..2n-1 from a single pair of partial sweeps."""
    params = chain_params(n, j, model, t, mode)
    _require_concrete(params)
    tables = transfer_tables(params)
    return [_spectrum(tables, z).entropy() for z in range(1, params.length)]


def matched_pair_weight(tables: TransferTables, x1: int, x2: int):
    """
    Unnormalized weight of all walks in which sites x1 < x2 form a matched pair.

    The pair runs at height a+1 above a prefix ending at a; the interior is a
    shifted chain of length m = x2-x1-1 whose own weight is its partition sum.
    """
    params = tables.params
    s = tables.semiring
    m = x2 - x1 - 1
    inner = chain_partition(
        s, m, params.j, WalkRules(params.model).allows_flat
    )
    if inner == s.zero:
        return s.zero
    left, right = tables.left[x1 - 1], tables.right[x2]
    color = s.count(params.j)
    total = s.zero
    for a in range(min(len(left), len(right))):
        weight = s.mul(tables.open_weight(a), color)
        weight = s.mul(weight, left[a])
        weight = s.mul(weight, s.t_power(2 * (a + 1) * (m + 1)))
        weight = s.mul(weight, inner)
        weight = s.mul(weight, s.t_power(2 * a))
        weight = s.mul(weight, right[a])
        total = s.add(total, weight)
    return total
