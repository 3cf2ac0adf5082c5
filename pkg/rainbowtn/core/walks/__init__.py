from .base import (
    StackLabel,
    Step,
    StepKind,
    Walk,
    WalkRules,
    WalkRulesMeta,
    area,
    format_walk,
    height_profile,
    is_valid,
    matched_pairs,
    max_height,
    pair_count,
    parse_walk,
    stack_at,
    validate,
)
from .enumeration import count_walks, enumerate_walks, flat_walk, shape_counts_by_pairs
from .fredkin_rules import FredkinRules
from .motzkin_rules import MotzkinRules

__all__ = [
    "Step",
    "StepKind",
    "Walk",
    "StackLabel",
    "WalkRules",
    "WalkRulesMeta",
    "MotzkinRules",
    "FredkinRules",
    "parse_walk",
    "format_walk",
    "validate",
    "is_valid",
    "height_profile",
    "area",
    "max_height",
    "stack_at",
    "matched_pairs",
    "pair_count",
    "count_walks",
    "enumerate_walks",
    "shape_counts_by_pairs",
    "flat_walk",
]
