"""Column-fused matrix product state exported from the network."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Set, Tuple

import numpy as np

from ..amplitudes import Monomial
from ..config import RuntimeLimits, resolve_limits
from ..exceptions import InvalidParameterError, ResourceCapError
from ..schemas import ChainModel, ChainParams
from ..states import GroundState
from ..utils import log_method_call
from ..walks import Step, WalkRules
from .contraction import Bond, ColumnFilling, _to_state, bond_stack, column_transfers
from .geometry import geometry
from .tiles import tile_set

SiteEntry = Tuple[int, Step, int]


@dataclass(frozen=True)
class MatrixProductState:
    """
    Site tensors over the reachable stack basis.

    ``bonds[z]`` lists the stacks (outermost color first) carried across cut
    z, sorted by height then colors; ``bonds[0]`` and ``bonds[2n]`` hold only
    the empty stack. ``sites[z - 1]`` maps (left index, step, right index) to
    the monomial weight of site z.
    """

    params: ChainParams
    bonds: Tuple[Tuple[Tuple[int, ...], ...], ...]
    sites: Tuple[Dict[SiteEntry, Monomial], ...]

    @property
    def length(self) -> int:
        return self.params.length

    @property
    def bond_dimensions(self) -> List[int]:
        """Dimensions of the interior cuts 1..2n-1."""
        return [len(self.bonds[z]) for z in range(1, self.length)]

    def site_entries(self, z: int) -> Dict[SiteEntry, Monomial]:
        if not 1 <= z <= self.length:
            raise InvalidParameterError(f"site {z} is outside 1..{self.length}")
        return self.sites[z - 1]

    def expand(self) -> GroundState:
        """Multiply the site tensors out into the state they represent."""
        partial: Dict[int, Dict[Tuple[Step, ...], Any]] = {0: {(): Monomial.one()}}
        for entries in self.sites:
            advanced: Dict[int, Dict[Tuple[Step, ...], Any]] = {}
            for (left, step, right), weight in entries.items():
                for prefix, amp in partial.get(left, {}).items():
                    target = advanced.setdefault(right, {})
                    key = prefix + (step,)
                    value = amp * weight
                    target[key] = target[key] + value if key in target else value
            partial = advanced
        return _to_state(self.params, partial.get(0, {}))

    def dense_tensors(self, t: Any = None) -> List[np.ndarray]:
        """
        Float site tensors of shape (left, local, right) at concrete t.

        The local index follows the model's alphabet: Up colors, Flat, Down colors.
        """
        t = self.params.t if t is None else t
        if t is None:
            raise InvalidParameterError("a concrete value of t is needed for dense tensors")
        alphabet = WalkRules(self.params.model).alphabet(self.params.j)
        local = {step: index for index, step in enumerate(alphabet)}
        tensors = []
        for z, entries in enumerate(self.sites, start=1):
            tensor = np.zeros((len(self.bonds[z - 1]), len(alphabet), len(self.bonds[z])))
            for (left, step, right), weight in entries.items():
                tensor[left, local[step], right] = float(weight.value_at(t))
            tensors.append(tensor)
        return tensors


def _stack_key(stack: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    return (len(stack), stack)


@log_method_call()
def contract_to_mps(
    n: int,
    j: int = 1,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    mode: Any = None,
    limits: Optional[RuntimeLimits] = None,
) -> MatrixProductState:
    """
    Fuse each network column into one site tensor.

    Bond states reachable from the left boundary and able to reach the right
    boundary are kept; at cut z these are the stacks of height
    <= min(z, 2n - z) (Motzkin) or with height of the parity of z (Fredkin).
    """
    limits = resolve_limits(limits)
    params = ChainParams(n=n, j=j, model=model, t=t, mode=mode)
    geom = geometry(params.n)
    tiles = tile_set(params.model, params.j)
    length = geom.length

    reachable: List[Set[Bond]] = [{()}]
    transitions: List[List[Tuple[Bond, ColumnFilling]]] = [[]]
    for z in range(1, length + 1):
        step_transitions = []
        targets: Set[Bond] = set()
        for bond in reachable[z - 1]:
            for filling in column_transfers(geom, tiles, z, bond):
                step_transitions.append((bond, filling))
                targets.add(filling.right)
        if len(targets) > limits.max_frontier:
            raise ResourceCapError(
                f"{len(targets)} bond states at cut {z} exceed max_frontier="
                f"{limits.max_frontier}"
            )
        reachable.append(targets)
        transitions.append(step_transitions)

    alive: List[Set[Bond]] = [set() for _ in range(length + 1)]
    alive[length] = reachable[length] & {()}
    for z in range(length, 0, -1):
        alive[z - 1] = {
            left for left, filling in transitions[z] if filling.right in alive[z]
        }

    bonds = []
    index: List[Dict[Bond, int]] = []
    for z in range(length + 1):
        ordered = sorted(alive[z], key=lambda b: _stack_key(bond_stack(b)))
        bonds.append(tuple(bond_stack(b) for b in ordered))
        index.append({b: i for i, b in enumerate(ordered)})

    sites = []
    for z in range(1, length + 1):
        entries: Dict[SiteEntry, Monomial] = {}
        for left, filling in transitions[z]:
            if left not in index[z - 1] or filling.right not in index[z]:
                continue
            key = (index[z - 1][left], filling.step, index[z][filling.right])
            weight = Monomial.x_power(filling.weight)
            entries[key] = entries[key] + weight if key in entries else weight
        sites.append(entries)

    mps = MatrixProductState(params=params, bonds=tuple(bonds), sites=tuple(sites))
    logging.debug(f"MPS bond dimensions: {mps.bond_dimensions}")
    return mps
