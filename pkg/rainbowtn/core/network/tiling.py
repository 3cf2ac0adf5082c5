"""
Concrete tilings of the pyramid: the canonical packing of a walk, its
inverse read-out, validity checks and the exhaustive tiling oracle.
"""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from .. import constants
from ..config import RuntimeLimits, resolve_limits
from ..exceptions import InvalidTilingError, InvalidWalkError, ResourceCapError
from ..schemas import ChainModel, TilingCheck
from ..walks import StepKind, Walk, format_walk, height_profile, validate
from .geometry import Cell, PyramidGeometry, geometry
from .tiles import OMEGA, EdgeValue, Tile, TileKind, TileSet, tile_set


class Tiling:
    """Assignment of tiles to the cells of a pyramid."""

    def __init__(
        self,
        geometry: PyramidGeometry,
        tiles: TileSet,
        assignment: Dict[Cell, Tile],
    ):
        self.geometry = geometry
        self.tiles = tiles
        self.assignment = dict(assignment)

    @property
    def n(self) -> int:
        return self.geometry.n

    def __getitem__(self, cell: Cell) -> Tile:
        return self.assignment[cell]

    def get(self, cell: Cell) -> Optional[Tile]:
        return self.assignment.get(cell)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.geometry == other.geometry and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash((self.geometry, tuple(sorted(self.assignment.items()))))

    def bottom_edges(self) -> List[EdgeValue]:
        out = []
        for z in range(1, self.geometry.length + 1):
            tile = self.assignment.get((z, self.geometry.bottom(z)))
            out.append(tile.bottom if tile is not None else OMEGA)
        return out

    def bond_at(self, z: int) -> Tuple[EdgeValue, ...]:
        """Horizontal bond values across cut z, top row first."""
        return tuple(
            self.assignment[(z, y)].right for y in self.geometry.cut_rows(z)
        )

    def weight_power(self) -> int:
        """Total power of x = sqrt(t) carried by the tiles."""
        return sum(tile.weight for tile in self.assignment.values())

    def horizontal_crossings(self) -> int:
        """Number of non-omega horizontal bonds over all cuts."""
        return sum(
            1
            for z in range(1, self.geometry.length)
            for value in self.bond_at(z)
            if not value.is_omega
        )

    def snapshot(self) -> dict:
        """JSON-ready description of the cells, tile kinds and edge values."""
        cells = []
        for z, y in sorted(self.assignment):
            tile = self.assignment[(z, y)]
            cells.append(
                {
                    "column": z,
                    "row": y,
                    "tile": tile.kind.value,
                    "color": tile.color,
                    "weight": tile.weight,
                    "edges": {
                        "left": tile.left.label,
                        "right": tile.right.label,
                        "top": tile.top.label,
                        "bottom": tile.bottom.label,
                    },
                }
            )
        snapshot = {
            "schema": constants.JSON_SCHEMA_VERSION,
            "model": self.tiles.model.value,
            "n": self.n,
            "colors": self.tiles.j,
            "cells": cells,
        }
        if validate_tiling(self).valid:
            snapshot["walk"] = format_walk(tiling_to_walk(self))
        return snapshot


def walk_to_tiling(walk: Walk, geom: Optional[PyramidGeometry] = None) -> Tiling:
    """
    Canonical packing of a valid walk.

    The pair at nesting depth k runs along row n+1-k; Ups and Downs drop
    vertical legs below their corners; a flat step at height h stacks a
    flat-stop at row n-h on top of flat-run tiles.
    """
    report = validate(walk)
    if not report.is_valid:
        raise InvalidWalkError(
            f"cannot tile invalid walk {format_walk(walk)}: "
            f"{report.violations[0].message}"
        )
    geom = geom or geometry(walk.n)
    if geom.length != walk.length:
        raise InvalidWalkError(
            f"walk of length {walk.length} does not fit a pyramid for n={geom.n}"
        )
    tiles = tile_set(walk.model, walk.colors)
    n = geom.n
    heights = (0,) + height_profile(walk)
    assignment: Dict[Cell, Tile] = {}

    # pairs as (x, y, color, depth)
    open_ups: List[Tuple[int, int]] = []
    pairs = []
    for x, step in enumerate(walk.steps, start=1):
        if step.kind == StepKind.up:
            open_ups.append((x, step.color))
        elif step.kind == StepKind.down:
            start, color = open_ups.pop()
            pairs.append((start, x, color, heights[x - 1]))

    for start, end, color, depth in pairs:
        row = n + 1 - depth
        for z in range(start + 1, end):
            assignment[(z, row)] = tiles.find(TileKind.horizontal, color)

    for z, step in enumerate(walk.steps, start=1):
        if step.kind == StepKind.up:
            corner_row = n + 1 - heights[z]
            assignment[(z, corner_row)] = tiles.find(TileKind.corner_up_right, step.color)
            leg = tiles.find(TileKind.vertical_up, step.color)
        elif step.kind == StepKind.down:
            corner_row = n + 1 - heights[z - 1]
            assignment[(z, corner_row)] = tiles.find(
                TileKind.corner_right_down, step.color
            )
            leg = tiles.find(TileKind.vertical_down, step.color)
        else:
            corner_row = n - heights[z]
            assignment[(z, corner_row)] = tiles.find(TileKind.flat_stop)
            leg = tiles.find(TileKind.flat_run)
        for y in range(geom.bottom(z), corner_row):
            assignment[(z, y)] = leg

    return Tiling(geom, tiles, assignment)


def validate_tiling(tiling: Tiling) -> TilingCheck:
    """Edge matching on every interior edge plus the boundary rules."""
    geom = tiling.geometry
    n = geom.n
    for cell in tiling.assignment:
        if not geom.has_cell(*cell):
            return TilingCheck(valid=False, violation=f"cell {cell} is outside the pyramid")
    for z, y in geom.cells:
        tile = tiling.get((z, y))
        if tile is None:
            return TilingCheck(valid=False, violation=f"cell ({z}, {y}) is empty")
        if y == n and not tile.top.is_omega:
            return TilingCheck(
                valid=False, violation=f"top boundary edge of ({z}, {y}) is {tile.top}"
            )
        left = tiling.get((z - 1, y)) if geom.has_cell(z - 1, y) else None
        if left is None and not tile.left.is_omega:
            return TilingCheck(
                valid=False, violation=f"left boundary edge of ({z}, {y}) is {tile.left}"
            )
        if left is not None and left.right != tile.left:
            return TilingCheck(
                valid=False,
                violation=(
                    f"horizontal mismatch between ({z - 1}, {y}) and ({z}, {y}): "
                    f"{left.right} != {tile.left}"
                ),
            )
        if not geom.has_cell(z + 1, y) and not tile.right.is_omega:
            return TilingCheck(
                valid=False,
                violation=f"right boundary edge of ({z}, {y}) is {tile.right}",
            )
        if geom.has_cell(z, y - 1):
            below = tiling.get((z, y - 1))
            if below is not None and below.top != tile.bottom:
                return TilingCheck(
                    valid=False,
                    violation=(
                        f"vertical mismatch between ({z}, {y}) and ({z}, {y - 1}): "
                        f"{tile.bottom} != {below.top}"
                    ),
                )
        elif tile.bottom.is_omega:
            return TilingCheck(
                valid=False, violation=f"physical leg of column {z} is omega"
            )
    return TilingCheck(valid=True)


def tiling_to_walk(tiling: Tiling) -> Walk:
    """Read the walk off the physical (bottom) edges of a valid tiling."""
    check = validate_tiling(tiling)
    if not check.valid:
        raise InvalidTilingError(f"invalid tiling: {check.violation}")
    steps = tuple(edge.to_step() for edge in tiling.bottom_edges())
    return Walk(steps, tiling.tiles.model, tiling.tiles.j)


def enumerate_valid_tilings(
    n: int,
    j: int,
    model: ChainModel = ChainModel.motzkin,
    limits: Optional[RuntimeLimits] = None,
) -> Iterator[Tiling]:
    """
    Every valid tiling exactly once, by cell-level backtracking over the
    whole tile set (no use of the walk bijection).

    :raises ResourceCapError: if n exceeds ``limits.max_tiling_n``
    """
    limits = resolve_limits(limits)
    if n > limits.max_tiling_n:
        raise ResourceCapError(
            f"exhaustive tiling enumeration is capped at n={limits.max_tiling_n}, got {n}"
        )
    geom = geometry(n)
    tiles = tile_set(model, j)
    cells = geom.cells
    logging.debug(f"Backtracking over {len(cells)} cells with {len(tiles)} tiles")
    assignment: Dict[Cell, Tile] = {}

    def fits(z: int, y: int, tile: Tile) -> bool:
        if y == n and not tile.top.is_omega:
            return False
        if geom.has_cell(z, y + 1) and assignment[(z, y + 1)].bottom != tile.top:
            return False
        if geom.has_cell(z - 1, y):
            if assignment[(z - 1, y)].right != tile.left:
                return False
        elif not tile.left.is_omega:
            return False
        if not geom.has_cell(z + 1, y) and not tile.right.is_omega:
            return False
        if y == geom.bottom(z) and tile.bottom.is_omega:
            return False
        return True

    def place(index: int) -> Iterator[Tiling]:
        if index == len(cells):
            yield Tiling(geom, tiles, assignment)
            return
        z, y = cells[index]
        for tile in tiles:
            if fits(z, y, tile):
                assignment[(z, y)] = tile
                yield from place(index + 1)
                del assignment[(z, y)]

    return place(0)
