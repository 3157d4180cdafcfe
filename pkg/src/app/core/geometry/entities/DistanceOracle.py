from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class DistanceOracle:
    """
    All-pairs incidence-graph distances of a connected geometry.

    `dist` is indexed by vertex id (points first, then lines). `girth_cycle`
    lists the vertices of one shortest cycle, or is empty for a forest.
    """

    num_points: int
    num_lines: int
    dist: np.ndarray
    diameter: int
    girth: Optional[int]
    girth_cycle: Tuple[int, ...] = ()

    @property
    def n(self) -> int:
        """Gonality of a certified polygon (its incidence-graph diameter)."""
        return self.diameter

    @property
    def m(self) -> int:
        return self.diameter // 2

    def __call__(self, x: int, y: int) -> int:
        return int(self.dist[x, y])

    def point_block(self) -> np.ndarray:
        """(P, P) point-to-point distances."""
        return self.dist[: self.num_points, : self.num_points]

    def line_point_block(self) -> np.ndarray:
        """(L, P) line-to-point distances."""
        return self.dist[self.num_points :, : self.num_points]

    def line_block(self) -> np.ndarray:
        """(L, L) line-to-line distances."""
        return self.dist[self.num_points :, self.num_points :]

    def opposite_points(self) -> np.ndarray:
        """(P, P) boolean mask of opposite point pairs."""
        return self.point_block() == self.diameter
