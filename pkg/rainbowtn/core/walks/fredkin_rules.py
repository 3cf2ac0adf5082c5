from fractions import Fraction

from ..schemas import ChainModel
from .base import WalkRules, WalkRulesMeta


class FredkinRules(WalkRules):
    """
    Colored Dyck walks (no flat steps), local dimension 2j.

    Colors are integers here; the half-integer spin label of color c is c/2.
    """

    model = ChainModel.fredkin

    @property
    def allows_flat(self) -> bool:
        return False

    @property
    def allows_zero_t(self) -> bool:
        return False

    def describe_color(self, color: int) -> str:
        return f"spin {Fraction(color, 2)}"


WalkRulesMeta._register(ChainModel.fredkin, FredkinRules)
