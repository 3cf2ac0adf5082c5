"""
Edge values and the tile table of the rainbow network.

Edge order is (left, right, top, bottom). A horizontal bond carries either
omega or the color marker +c of the pair running along it; vertical edges
carry +c / -c on arrowed paths and 0 on arrowless ones.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..schemas import ChainModel
from ..walks import Step, StepKind, WalkRules


class EdgeKind(str, Enum):
    omega = "omega"
    zero = "zero"
    plus = "plus"
    minus = "minus"


@dataclass(frozen=True)
class EdgeValue:
    kind: EdgeKind
    color: Optional[int] = None

    @classmethod
    def plus_color(cls, color: int) -> "EdgeValue":
        return cls(EdgeKind.plus, color)

    @classmethod
    def minus_color(cls, color: int) -> "EdgeValue":
        return cls(EdgeKind.minus, color)

    @property
    def is_omega(self) -> bool:
        return self.kind == EdgeKind.omega

    @property
    def label(self) -> str:
        """Plain-text label used in snapshots: omega, 0, +c or -c."""
        if self.kind == EdgeKind.omega:
            return "omega"
        if self.kind == EdgeKind.zero:
            return "0"
        sign = "+" if self.kind == EdgeKind.plus else "-"
        return f"{sign}{self.color}"

    def to_step(self) -> Step:
        """Physical reading of a bottom edge; omega has none."""
        if self.kind == EdgeKind.plus:
            return Step.up(self.color)
        if self.kind == EdgeKind.minus:
            return Step.down(self.color)
        if self.kind == EdgeKind.zero:
            return Step.flat()
        raise ValueError("omega is not a physical state")

    @classmethod
    def from_step(cls, step: Step) -> "EdgeValue":
        if step.kind == StepKind.up:
            return cls.plus_color(step.color)
        if step.kind == StepKind.down:
            return cls.minus_color(step.color)
        return ZERO

    def __str__(self) -> str:
        return "ω" if self.is_omega else self.label


OMEGA = EdgeValue(EdgeKind.omega)
ZERO = EdgeValue(EdgeKind.zero)


def edge_values(j: int) -> List[EdgeValue]:
    """All 2j+2 edge values."""
    values = [OMEGA, ZERO]
    for c in range(1, j + 1):
        values.extend([EdgeValue.plus_color(c), EdgeValue.minus_color(c)])
    return values


class TileKind(str, Enum):
    vertical_up = "vertical_up"
    corner_up_right = "corner_up_right"
    horizontal = "horizontal"
    corner_right_down = "corner_right_down"
    vertical_down = "vertical_down"
    flat_run = "flat_run"
    flat_stop = "flat_stop"


@dataclass(frozen=True)
class Tile:
    """A rank-1 delta tile; ``weight`` is the power of x = sqrt(t) it carries."""

    kind: TileKind
    left: EdgeValue
    right: EdgeValue
    top: EdgeValue
    bottom: EdgeValue
    weight: int = 0
    color: Optional[int] = None

    @property
    def edges(self) -> Tuple[EdgeValue, EdgeValue, EdgeValue, EdgeValue]:
        return (self.left, self.right, self.top, self.bottom)

    @property
    def is_arrowed(self) -> bool:
        return self.color is not None

    def __str__(self) -> str:
        suffix = f"({self.color})" if self.color is not None else ""
        return f"{self.kind.value}{suffix}"


def _colored_tiles(c: int) -> List[Tile]:
    up, down = EdgeValue.plus_color(c), EdgeValue.minus_color(c)
    return [
        Tile(TileKind.vertical_up, OMEGA, OMEGA, up, up, 0, c),
        Tile(TileKind.corner_up_right, OMEGA, up, OMEGA, up, 1, c),
        Tile(TileKind.horizontal, up, up, OMEGA, OMEGA, 2, c),
        Tile(TileKind.corner_right_down, up, OMEGA, OMEGA, down, 1, c),
        Tile(TileKind.vertical_down, OMEGA, OMEGA, down, down, 0, c),
    ]


FLAT_TILES = (
    Tile(TileKind.flat_run, OMEGA, OMEGA, ZERO, ZERO, 0),
    Tile(TileKind.flat_stop, OMEGA, OMEGA, OMEGA, ZERO, 0),
)


@dataclass(frozen=True)
class TileSet:
    model: ChainModel
    j: int
    tiles: Tuple[Tile, ...]
    _by_left_top: Dict[Tuple[EdgeValue, EdgeValue], Tuple[Tile, ...]] = field(
        default=None, compare=False, hash=False, repr=False
    )

    def __post_init__(self):
        index: Dict[Tuple[EdgeValue, EdgeValue], List[Tile]] = {}
        for tile in self.tiles:
            index.setdefault((tile.left, tile.top), []).append(tile)
        object.__setattr__(
            self, "_by_left_top", {k: tuple(v) for k, v in index.items()}
        )

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def candidates(self, left: EdgeValue, top: EdgeValue) -> Tuple[Tile, ...]:
        """Tiles whose left and top edges are fixed by already placed neighbours."""
        return self._by_left_top.get((left, top), ())

    def find(self, kind: TileKind, color: Optional[int] = None) -> Tile:
        for tile in self.tiles:
            if tile.kind == kind and tile.color == color:
                return tile
        raise KeyError(f"no {kind.value} tile with color {color} in this set")


@lru_cache(maxsize=32)
def tile_set(model: ChainModel, j: int) -> TileSet:
    """
    Tile table of the network: five arrowed tiles per color, plus the
    flat-run and flat-stop tiles for the Motzkin chain.

    :return: TileSet with 5j + 2 (Motzkin) or 5j (Fredkin) tiles
    """
    model = ChainModel(model)
    tiles: List[Tile] = []
    for c in range(1, j + 1):
        tiles.extend(_colored_tiles(c))
    if WalkRules(model).allows_flat:
        tiles.extend(FLAT_TILES)
    return TileSet(model=model, j=j, tiles=tuple(tiles))
