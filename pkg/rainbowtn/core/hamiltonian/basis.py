"""
Local site basis and the product-state indexing shared by the Hamiltonian
and the dense state vectors.
"""

from typing import Dict, List

import numpy as np

from ..exceptions import InvalidParameterError
from ..schemas import ChainModel
from ..walks import Step, Walk, WalkRules


class LocalBasis:
    """
    Ordered local states u^1..u^j, 0, d^1..d^j (no 0 for Fredkin).

    Product states are indexed with site 1 as the most significant digit,
    matching ``scipy.sparse.kron`` ordering.
    """

    def __init__(self, j: int, model: ChainModel = ChainModel.motzkin):
        if j < 1:
            raise InvalidParameterError(f"j must be >= 1, got {j}")
        self.j = j
        self.model = ChainModel(model)
        self.states: List[Step] = WalkRules(self.model).alphabet(j)
        self._index: Dict[Step, int] = {s: i for i, s in enumerate(self.states)}

    @property
    def dimension(self) -> int:
        return len(self.states)

    def index(self, step: Step) -> int:
        try:
            return self._index[step]
        except KeyError:
            raise InvalidParameterError(f"{step} is not a local state for j={self.j}")

    def state(self, index: int) -> Step:
        return self.states[index]

    def up(self, k: int) -> int:
        return self.index(Step.up(k))

    def down(self, k: int) -> int:
        return self.index(Step.down(k))

    def flat(self) -> int:
        return self.index(Step.flat())

    def walk_index(self, walk: Walk) -> int:
        index = 0
        for step in walk.steps:
            index = index * self.dimension + self.index(step)
        return index

    def index_walk(self, index: int, length: int) -> Walk:
        steps = []
        for _ in range(length):
            index, digit = divmod(index, self.dimension)
            steps.append(self.states[digit])
        return Walk(tuple(reversed(steps)), self.model, self.j)

    def digits(self, length: int) -> np.ndarray:
        """Local state of every site for every product index, shape (d**length, length)."""
        indices = np.arange(self.dimension**length, dtype=np.int64)
        powers = self.dimension ** np.arange(length - 1, -1, -1, dtype=np.int64)
        return (indices[:, None] // powers[None, :]) % self.dimension

    def unit(self, *steps: Step) -> np.ndarray:
        """Product basis vector of a few adjacent sites."""
        vector = np.zeros(self.dimension ** len(steps))
        index = 0
        for step in steps:
            index = index * self.dimension + self.index(step)
        vector[index] = 1.0
        return vector
