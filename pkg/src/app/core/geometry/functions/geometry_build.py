"""
Assembling incidence structures from point lists.
"""

from typing import List, Sequence

from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.exceptions.GeometryException import GeometryException


def geometry_build(
    lines: Sequence[Sequence[int]], num_points: int, label: str = ""
) -> Geometry:
    """
    Build a Geometry from the point lists of its lines.

    Line order and the order of points inside each line are preserved.

    Raises:
        GeometryException: empty line, index out of range, repeated point
            on a line, or a point that lies on no line
    """
    if num_points < 1:
        raise GeometryException(f"a geometry needs at least one point, got {num_points}")

    through: List[List[int]] = [[] for _ in range(num_points)]
    normalised = []
    for j, line in enumerate(lines):
        points = tuple(int(p) for p in line)
        if not points:
            raise GeometryException(f"line {j} is empty")
        for p in points:
            if not 0 <= p < num_points:
                raise GeometryException(
                    f"line {j} references point {p}, outside 0..{num_points - 1}"
                )
        if len(set(points)) != len(points):
            repeated = sorted({p for p in points if points.count(p) > 1})
            raise GeometryException(f"line {j} repeats point(s) {repeated}")
        for p in points:
            through[p].append(j)
        normalised.append(points)

    isolated = [p for p, lines_here in enumerate(through) if not lines_here]
    if isolated:
        raise GeometryException(f"point(s) {isolated[:10]} lie on no line")

    return Geometry(
        num_points=num_points,
        lines=tuple(normalised),
        lines_on_point=tuple(tuple(ls) for ls in through),
        label=label,
    )


def mutate_remove_incidence(geometry: Geometry, line: int, point: int) -> Geometry:
    """Copy of `geometry` with the single flag (point, line) deleted."""
    if point not in geometry.lines[line]:
        raise GeometryException(f"point {point} is not on line {line}")
    lines = [
        tuple(p for p in pts if not (j == line and p == point))
        for j, pts in enumerate(geometry.lines)
    ]
    return geometry_build(lines, geometry.num_points, label=f"{geometry.label}-mutated")
