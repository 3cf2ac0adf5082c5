"""
Exact contraction of the rainbow network, one column at a time.

The frontier maps each horizontal bond vector at the current cut to the
physical prefixes that reach it and their amplitudes. Only bond vectors that
some partial tiling actually produces are kept, which are exactly the
stacks (colors top to bottom, then omega padding).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from ..amplitudes import LogAmplitude, Monomial
from ..config import RuntimeLimits, resolve_limits
from ..exceptions import InvalidParameterError, ResourceCapError
from ..schemas import ChainModel, ChainParams
from ..states import GroundState
from ..utils import log_method_call
from ..walks import Step, Walk
from .geometry import PyramidGeometry, geometry
from .tiles import OMEGA, EdgeValue, Tile, TileSet, tile_set

Bond = Tuple[EdgeValue, ...]


@dataclass(frozen=True)
class ColumnFilling:
    """One admissible filling of a column given its left bond."""

    right: Bond
    step: Step
    weight: int
    tiles: Tuple[Tile, ...]


def bond_height(bond: Bond) -> int:
    return sum(1 for value in bond if not value.is_omega)


def bond_stack(bond: Bond) -> Tuple[int, ...]:
    """Colors carried by a bond vector, top row first."""
    return tuple(value.color for value in bond if not value.is_omega)


def left_boundary_bond() -> Bond:
    return ()


@lru_cache(maxsize=4096)
def column_transfers(
    geom: PyramidGeometry, tiles: TileSet, z: int, left: Bond
) -> Tuple[ColumnFilling, ...]:
    """
    All fillings of column z compatible with the bond on its left.

    The column is filled from the top row down; the top edge of the top row
    is omega, left edges below the incoming cut are boundary (omega), right
    edges of rows missing from column z+1 are boundary (omega) and the
    physical leg at the bottom may not be omega.
    """
    rows = geom.rows(z)
    next_rows = set(geom.cut_rows(z))
    incoming = list(left) + [OMEGA] * (len(rows) - len(left))
    out: List[ColumnFilling] = []

    def descend(index: int, top: EdgeValue, placed: List[Tile]):
        if index == len(rows):
            if top.is_omega:
                return
            right = tuple(
                tile.right for tile, y in zip(placed, rows) if y in next_rows
            )
            out.append(
                ColumnFilling(
                    right=right,
                    step=top.to_step(),
                    weight=sum(tile.weight for tile in placed),
                    tiles=tuple(placed),
                )
            )
            return
        y = rows[index]
        for tile in tiles.candidates(incoming[index], top):
            if y not in next_rows and not tile.right.is_omega:
                continue
            placed.append(tile)
            descend(index + 1, tile.bottom, placed)
            placed.pop()

    descend(0, OMEGA, [])
    return tuple(out)


def _params(n, j, model, t, mode) -> ChainParams:
    return ChainParams(n=n, j=j, model=model, t=t, mode=mode)


def _sweep(
    params: ChainParams,
    limits: RuntimeLimits,
    max_height: Optional[int] = None,
) -> Dict[Tuple[Step, ...], Any]:
    geom = geometry(params.n)
    tiles = tile_set(params.model, params.j)
    frontier: Dict[Bond, Dict[Tuple[Step, ...], Any]] = {
        left_boundary_bond(): {(): Monomial.one()}
    }
    for z in range(1, geom.length + 1):
        advanced: Dict[Bond, Dict[Tuple[Step, ...], Any]] = {}
        size = 0
        for bond, prefixes in frontier.items():
            for filling in column_transfers(geom, tiles, z, bond):
                if max_height is not None and bond_height(filling.right) > max_height:
                    continue
                target = advanced.setdefault(filling.right, {})
                factor = Monomial.x_power(filling.weight)
                for prefix, amp in prefixes.items():
                    key = prefix + (filling.step,)
                    value = amp * factor
                    if key in target:
                        target[key] = target[key] + value
                    else:
                        target[key] = value
                        size += 1
        if size > limits.max_frontier:
            raise ResourceCapError(
                f"contraction frontier of {size} prefixes at column {z} exceeds "
                f"max_frontier={limits.max_frontier}"
            )
        frontier = advanced
        logging.debug(f"column {z}: {len(frontier)} bond states, {size} prefixes")
    return frontier.get((), {})


def _to_state(params: ChainParams, amplitudes: Dict[Tuple[Step, ...], Any]) -> GroundState:
    out = {}
    for steps, amp in amplitudes.items():
        walk = Walk(steps, params.model, params.j)
        if params.is_exact:
            if params.t == 0 and not (isinstance(amp, Monomial) and amp.power == 0):
                continue
            out[walk] = amp
        else:
            out[walk] = _to_log(amp, params.t)
    return GroundState(params, out)


def _to_log(amp, t: float) -> LogAmplitude:
    if isinstance(amp, Monomial):
        return amp.to_log(t)
    # sums of unlike powers only arise if a walk had several tilings
    total = LogAmplitude.zero()
    for power, coefficient in amp:
        total = total + Monomial(coefficient, power).to_log(t)
    return total


@log_method_call()
def contract(
    n: int,
    j: int = 1,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    mode: Any = None,
    limits: Optional[RuntimeLimits] = None,
) -> GroundState:
    """
    Contract the full network into the unnormalized state sum_w t**A(w) |w>.

    Exact mode keeps monomials in x = sqrt(t) (symbolic when t is omitted);
    float mode converts each amplitude to the log domain at the end.
    """
    params = _params(n, j, model, t, mode)
    amplitudes = _sweep(params, resolve_limits(limits))
    return _to_state(params, amplitudes)


@log_method_call()
def contract_truncated(
    n: int,
    j: int,
    model: ChainModel,
    t: Any,
    max_height: int,
    mode: Any = None,
    limits: Optional[RuntimeLimits] = None,
) -> GroundState:
    """
    Contraction with every horizontal bond vector limited to ``max_height``
    non-omega entries; keeps exactly the walks of height <= max_height.
    """
    if max_height < 0:
        raise InvalidParameterError(f"max_height must be >= 0, got {max_height}")
    params = _params(n, j, model, t, mode)
    amplitudes = _sweep(params, resolve_limits(limits), max_height=max_height)
    return _to_state(params, amplitudes)
