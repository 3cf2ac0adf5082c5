"""
Colored Motzkin and Fredkin walks: representation, text codec, validity
rules, heights, area and stack analysis.
"""

from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ..exceptions import InvalidParameterError, InvalidWalkError
from ..schemas import ChainModel, ValidityReport, Violation


class StepKind(str, Enum):
    """Step kinds, ordered Up < Flat < Down for enumeration."""

    up = "U"
    flat = "F"
    down = "D"


_KIND_RANK = {StepKind.up: 0, StepKind.flat: 1, StepKind.down: 2}


@dataclass(frozen=True)
class Step:
    """One local spin state: Up(c), Down(c) or the colorless Flat."""

    kind: StepKind
    color: Optional[int] = None

    def __post_init__(self):
        if self.kind == StepKind.flat and self.color is not None:
            raise InvalidWalkError("a flat step carries no color")
        if self.kind != StepKind.flat and (
            not isinstance(self.color, int) or self.color < 1
        ):
            raise InvalidWalkError(f"{self.kind.name} step needs a color >= 1")

    @classmethod
    def up(cls, color: int) -> "Step":
        return cls(StepKind.up, color)

    @classmethod
    def down(cls, color: int) -> "Step":
        return cls(StepKind.down, color)

    @classmethod
    def flat(cls) -> "Step":
        return cls(StepKind.flat)

    @property
    def delta(self) -> int:
        if self.kind == StepKind.up:
            return 1
        if self.kind == StepKind.down:
            return -1
        return 0

    @property
    def token(self) -> str:
        if self.kind == StepKind.flat:
            return "F"
        return f"{self.kind.value}{self.color}"

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (_KIND_RANK[self.kind], self.color or 0)

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class Walk:
    """A sequence of steps of even length 2n, tagged with its model and color count."""

    steps: Tuple[Step, ...]
    model: ChainModel = ChainModel.motzkin
    colors: int = 1

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "model", ChainModel(self.model))

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def __str__(self) -> str:
        return format_walk(self)

    def retag(self, model: ChainModel, colors: int) -> "Walk":
        """Same steps under another (model, colors) tag."""
        return Walk(self.steps, model, colors)


@dataclass(frozen=True)
class StackLabel:
    """Colors of the open pairs crossing a cut, outermost pair first."""

    colors: Tuple[int, ...] = ()

    @property
    def height(self) -> int:
        return len(self.colors)

    def push(self, color: int) -> "StackLabel":
        return StackLabel(self.colors + (color,))

    def pop(self) -> "StackLabel":
        if not self.colors:
            raise InvalidWalkError("cannot pop an empty stack")
        return StackLabel(self.colors[:-1])

    @property
    def top(self) -> Optional[int]:
        return self.colors[-1] if self.colors else None

    def __len__(self) -> int:
        return len(self.colors)


class WalkRulesMeta(ABCMeta):
    # Class-level registry of rule sets per model
    _registry: Dict[ChainModel, type] = {}

    @classmethod
    def _register(cls, model, rules_class):
        """Register the rules class for a chain model"""
        cls._registry[ChainModel(model)] = rules_class

    """Metaclass that combines ABC functionality with factory pattern"""

    def __call__(cls, model=None, **kwargs):
        # Only intercept calls to the base WalkRules class
        if cls.__name__ != "WalkRules":
            instance = cls.__new__(cls)
            if isinstance(instance, cls):
                instance.__init__(**kwargs)
            return instance
        try:
            model = ChainModel(model)
        except ValueError:
            raise InvalidParameterError(f"Unknown chain model: {model}")
        rules_class = cls._registry.get(model)
        if rules_class is None:
            raise InvalidParameterError(f"No walk rules registered for: {model.value}")
        return rules_class(**kwargs)


class WalkRules(metaclass=WalkRulesMeta):
    """Model-specific walk rules; ``WalkRules("fredkin")`` returns the Fredkin rules."""

    model: ChainModel

    @property
    @abstractmethod
    def allows_flat(self) -> bool:
        pass

    @property
    @abstractmethod
    def allows_zero_t(self) -> bool:
        pass

    def local_dimension(self, j: int) -> int:
        return 2 * j + (1 if self.allows_flat else 0)

    def alphabet(self, j: int) -> List[Step]:
        """Local states in enumeration order: Up colors, Flat, Down colors."""
        steps = [Step.up(c) for c in range(1, j + 1)]
        if self.allows_flat:
            steps.append(Step.flat())
        steps.extend(Step.down(c) for c in range(1, j + 1))
        return steps

    def describe_color(self, color: int) -> str:
        return str(color)


def parse_walk(
    text: str,
    model: ChainModel = ChainModel.motzkin,
    colors: Optional[int] = None,
) -> Walk:
    """
    Parse whitespace separated "U<k>", "D<k>" and "F" tokens into a Walk.

    Global constraints are left to ``validate``.

    :param text: token string, e.g. "U1 F D1 F"
    :param model: chain model the walk is tagged with
    :param colors: declared color count; inferred from the largest color when omitted
    :return: Walk
    """
    tokens = text.split()
    if not tokens:
        raise InvalidWalkError("empty walk")
    steps = []
    for position, token in enumerate(tokens, start=1):
        head, tail = token[0].upper(), token[1:]
        if head == "F" and not tail:
            steps.append(Step.flat())
        elif head in ("U", "D") and tail.isdigit() and int(tail) >= 1:
            color = int(tail)
            steps.append(Step.up(color) if head == "U" else Step.down(color))
        else:
            raise InvalidWalkError(f"malformed token {token!r} at step {position}")
    if len(steps) % 2:
        raise InvalidWalkError(f"walk length must be even, got {len(steps)}")
    used = max((s.color for s in steps if s.color is not None), default=1)
    if colors is None:
        colors = used
    elif used > colors:
        raise InvalidWalkError(f"color {used} is out of range 1..{colors}")
    return Walk(tuple(steps), ChainModel(model), colors)


def format_walk(walk: Walk) -> str:
    return " ".join(step.token for step in walk.steps)


def validate(walk: Walk) -> ValidityReport:
    """
    Check a walk against the rules of its model.

    Violations are returned as data. An empty report means the walk is a
    valid member of the colored walk set.
    """
    violations: List[Violation] = []
    rules = WalkRules(walk.model)
    stack: List[int] = []
    height = 0
    below_zero = False

    for position, step in enumerate(walk.steps, start=1):
        if step.color is not None and step.color > walk.colors:
            violations.append(
                Violation(
                    kind="color_out_of_range",
                    position=position,
                    message=f"color {step.color} is outside 1..{walk.colors}",
                )
            )
        if step.kind == StepKind.flat:
            if not rules.allows_flat:
                violations.append(
                    Violation(
                        kind="flat_in_fredkin",
                        position=position,
                        message="Fredkin walks have no flat steps",
                    )
                )
            continue
        if step.kind == StepKind.up:
            stack.append(step.color)
            height += 1
            continue
        height -= 1
        if not stack:
            if not below_zero:
                violations.append(
                    Violation(
                        kind="negative_height",
                        position=position,
                        message=f"height drops to {height} after step {position}",
                    )
                )
            below_zero = True
            continue
        expected = stack.pop()
        if expected != step.color:
            violations.append(
                Violation(
                    kind="color_mismatch",
                    position=position,
                    message=(
                        f"down color {step.color} does not match the most recent "
                        f"up color {expected}"
                    ),
                )
            )

    if len(walk.steps) % 2:
        violations.append(
            Violation(
                kind="odd_length",
                position=len(walk.steps),
                message=f"walk length {len(walk.steps)} is odd",
            )
        )
    if height != 0 and not below_zero:
        violations.append(
            Violation(
                kind="nonzero_endpoint",
                position=len(walk.steps),
                message=f"walk ends at height {height}",
            )
        )
    return ValidityReport(violations=violations)


def is_valid(walk: Walk) -> bool:
    return validate(walk).is_valid


def _require_valid(walk: Walk) -> None:
    report = validate(walk)
    if not report.is_valid:
        first = report.violations[0]
        raise InvalidWalkError(f"invalid walk {format_walk(walk)}: {first.message}")


def height_profile(walk: Walk) -> Tuple[int, ...]:
    """Heights h_1..h_2n after each step; no validation."""
    heights = []
    height = 0
    for step in walk.steps:
        height += step.delta
        heights.append(height)
    return tuple(heights)


def area(walk: Walk) -> int:
    """Sum of the heights at the interior cuts 1..2n-1."""
    _require_valid(walk)
    return sum(height_profile(walk)[:-1])


def max_height(walk: Walk) -> int:
    return max((0,) + height_profile(walk))


def stack_at(walk: Walk, z: int) -> StackLabel:
    """
    Colors of the unmatched Ups crossing cut z, outermost first.

    :param walk: a valid walk
    :param z: cut index between sites z and z+1, 1 <= z <= 2n-1
    """
    if not 1 <= z <= len(walk.steps) - 1:
        raise InvalidParameterError(f"cut {z} is outside 1..{len(walk.steps) - 1}")
    _require_valid(walk)
    stack: List[int] = []
    for step in walk.steps[:z]:
        if step.kind == StepKind.up:
            stack.append(step.color)
        elif step.kind == StepKind.down:
            stack.pop()
    return StackLabel(tuple(stack))


def matched_pairs(walk: Walk) -> FrozenSet[Tuple[int, int, int]]:
    """The Up/Down matching induced by the stack discipline as (x, y, color), 1-based."""
    _require_valid(walk)
    open_ups: List[int] = []
    pairs = set()
    for position, step in enumerate(walk.steps, start=1):
        if step.kind == StepKind.up:
            open_ups.append(position)
        elif step.kind == StepKind.down:
            pairs.add((open_ups.pop(), position, step.color))
    return frozenset(pairs)


def pair_count(walk: Walk) -> int:
    return sum(1 for step in walk.steps if step.kind == StepKind.up)
