from .contraction import (
    ColumnFilling,
    bond_height,
    bond_stack,
    column_transfers,
    contract,
    contract_truncated,
)
from .geometry import PyramidGeometry, geometry
from .mps import MatrixProductState, contract_to_mps
from .tiles import (
    OMEGA,
    ZERO,
    EdgeKind,
    EdgeValue,
    Tile,
    TileKind,
    TileSet,
    edge_values,
    tile_set,
)
from .tiling import (
    Tiling,
    enumerate_valid_tilings,
    tiling_to_walk,
    validate_tiling,
    walk_to_tiling,
)

__all__ = [
    "EdgeKind",
    "EdgeValue",
    "OMEGA",
    "ZERO",
    "edge_values",
    "Tile",
    "TileKind",
    "TileSet",
    "tile_set",
    "PyramidGeometry",
    "geometry",
    "Tiling",
    "walk_to_tiling",
    "tiling_to_walk",
    "validate_tiling",
    "enumerate_valid_tilings",
    "ColumnFilling",
    "column_transfers",
    "bond_height",
    "bond_stack",
    "contract",
    "contract_truncated",
    "MatrixProductState",
    "contract_to_mps",
]
