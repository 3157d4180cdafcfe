"""
Finite point-line incidence structure.

Vertices of the incidence graph are numbered with the points first
(0 .. P-1) followed by the lines (P .. P+L-1). Operations that accept an
"element" take such a vertex id; operations that accept a "line" take the
line index 0 .. L-1.
"""

from typing import FrozenSet, List, Tuple

import numpy as np
from pydantic import model_validator

from src.app.core.origin.entities.base_class import FrozenClass


class Geometry(FrozenClass):
    num_points: int
    lines: Tuple[Tuple[int, ...], ...]
    lines_on_point: Tuple[Tuple[int, ...], ...]
    label: str = ""

    @model_validator(mode="after")
    def _check_consistency(self) -> "Geometry":
        if len(self.lines_on_point) != self.num_points:
            raise ValueError("lines_on_point must have one entry per point")
        incidences = {(p, j) for j, line in enumerate(self.lines) for p in line}
        mirrored = {(p, j) for p, through in enumerate(self.lines_on_point) for j in through}
        if incidences != mirrored:
            raise ValueError("points_on_line and lines_on_point disagree")
        return self

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    @property
    def num_vertices(self) -> int:
        return self.num_points + self.num_lines

    def vertex_of_line(self, line: int) -> int:
        return self.num_points + line

    def line_of_vertex(self, vertex: int) -> int:
        if vertex < self.num_points:
            raise ValueError(f"vertex {vertex} is a point")
        return vertex - self.num_points

    def is_point(self, vertex: int) -> bool:
        return vertex < self.num_points

    def describe(self, vertex: int) -> str:
        if self.is_point(vertex):
            return f"p{vertex}"
        return f"L{self.line_of_vertex(vertex)}"

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        if self.is_point(vertex):
            return tuple(self.num_points + j for j in self.lines_on_point[vertex])
        return self.lines[self.line_of_vertex(vertex)]

    def line_sizes(self) -> List[int]:
        return [len(line) for line in self.lines]

    def point_degrees(self) -> List[int]:
        return [len(through) for through in self.lines_on_point]

    def point_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(line) for line in self.lines]

    def incidence_matrix(self) -> np.ndarray:
        """(L, P) 0/1 matrix; row j is the indicator of line j."""
        matrix = np.zeros((self.num_lines, self.num_points), dtype=np.int64)
        for j, line in enumerate(self.lines):
            matrix[j, list(line)] = 1
        return matrix

    def relabel(self, label: str) -> "Geometry":
        return self.model_copy(update={"label": label})
