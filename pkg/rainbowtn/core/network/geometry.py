"""
Pyramid geometry of the network: cells, physical legs and the rows crossing
each cut.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from ..exceptions import InvalidParameterError

Cell = Tuple[int, int]  # (column z, row y)


@dataclass(frozen=True)
class PyramidGeometry:
    """
    Inverted step pyramid of n(n+1) cells.

    Row y (1 = bottom, n = top) spans columns n+1-y .. n+y. Column z hangs
    one physical leg from the bottom edge of its lowest cell, row bottom(z).
    """

    n: int

    @property
    def length(self) -> int:
        return 2 * self.n

    def bottom(self, z: int) -> int:
        return self.n + 1 - min(z, 2 * self.n + 1 - z)

    def rows(self, z: int) -> List[int]:
        """Rows of column z, top to bottom."""
        return list(range(self.n, self.bottom(z) - 1, -1))

    def has_cell(self, z: int, y: int) -> bool:
        return 1 <= z <= self.length and self.bottom(z) <= y <= self.n

    @property
    def cells(self) -> List[Cell]:
        """Column-major, each column top to bottom."""
        return [(z, y) for z in range(1, self.length + 1) for y in self.rows(z)]

    def cut_rows(self, z: int) -> List[int]:
        """Rows whose horizontal bond crosses cut z (between columns z and z+1), top to bottom."""
        if z <= 0 or z >= self.length:
            return []
        lowest = max(self.bottom(z), self.bottom(z + 1))
        return list(range(self.n, lowest - 1, -1))

    def cut_size(self, z: int) -> int:
        return len(self.cut_rows(z))

    def boundary_edges(self) -> Dict[str, List[Cell]]:
        """
        Cells owning each kind of boundary edge.

        ``bottom`` edges are the 2n physical legs; ``top``, ``left`` and
        ``right`` edges must carry omega.
        """
        n = self.n
        return {
            "top": [(z, n) for z in range(1, self.length + 1)],
            "left": [(z, self.bottom(z)) for z in range(1, n + 1)],
            "right": [(z, self.bottom(z)) for z in range(n + 1, self.length + 1)],
            "bottom": [(z, self.bottom(z)) for z in range(1, self.length + 1)],
        }


@lru_cache(maxsize=64)
def geometry(n: int) -> PyramidGeometry:
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    return PyramidGeometry(n)
