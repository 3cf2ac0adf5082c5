from ..schemas import ChainModel
from .base import WalkRules, WalkRulesMeta


class MotzkinRules(WalkRules):
    """Colored Motzkin walks: Up, Flat and Down steps; local dimension 2j+1."""

    model = ChainModel.motzkin

    @property
    def allows_flat(self) -> bool:
        return True

    @property
    def allows_zero_t(self) -> bool:
        # the flat walk has zero area and survives alone at t = 0
        return True


WalkRulesMeta._register(ChainModel.motzkin, MotzkinRules)
