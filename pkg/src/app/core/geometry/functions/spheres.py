"""
Spheres and balls around an element, closest points and opposite pairs.
"""

from typing import List, Literal, Tuple

import numpy as np

from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.exceptions.GeometryException import (
    GeometryException,
    UniquenessViolationException,
)

Kind = Literal["points", "lines", "both"]
PairKind = Literal["point-point", "line-line"]


def sphere(
    geometry: Geometry,
    oracle: DistanceOracle,
    x: int,
    i: int,
    kind: Kind = "both",
    cumulative: bool = False,
) -> List[int]:
    """
    Vertex ids at distance exactly i from x (at most i when cumulative).

    kind="points" gives P_i(x), "lines" gives L_i(x), "both" gives the full
    sphere. Negative radii give the empty set.
    """
    if not 0 <= x < geometry.num_vertices:
        raise GeometryException(f"element {x} is outside 0..{geometry.num_vertices - 1}")
    if i < 0:
        return []
    row = oracle.dist[x]
    ids = np.flatnonzero(row <= i if cumulative else row == i)
    if kind == "points":
        ids = ids[ids < geometry.num_points]
    elif kind == "lines":
        ids = ids[ids >= geometry.num_points]
    return [int(v) for v in ids]


def point_ball(oracle: DistanceOracle, x: int, radius: int) -> np.ndarray:
    """Boolean mask over points of P_{<=radius}(x)."""
    return oracle.dist[x, : oracle.num_points] <= radius


def closest_point_on_line(
    geometry: Geometry, oracle: DistanceOracle, v: int, line: int
) -> int:
    """
    The unique point of `line` nearest to point v.

    Raises:
        UniquenessViolationException: two points of the line tie, which
            cannot happen in a generalised polygon
    """
    if not geometry.is_point(v):
        raise GeometryException(f"{geometry.describe(v)} is not a point")
    points = np.asarray(geometry.lines[line])
    ds = oracle.dist[v, points]
    nearest = points[ds == ds.min()]
    if nearest.size != 1:
        raise UniquenessViolationException(
            f"line {line} has {nearest.size} points at distance {int(ds.min())} from p{v}",
            witness=[v, geometry.vertex_of_line(line)] + [int(p) for p in nearest],
        )
    return int(nearest[0])


def opposite_pairs(
    geometry: Geometry, oracle: DistanceOracle, kind: PairKind = "point-point"
) -> List[Tuple[int, int]]:
    """All ordered pairs of vertex ids of the given kind at maximal distance."""
    if kind == "point-point":
        block, offset = oracle.point_block(), 0
    elif kind == "line-line":
        block, offset = oracle.line_block(), geometry.num_points
    else:
        raise GeometryException(f"unknown pair kind {kind!r}")
    pairs = np.argwhere(block == oracle.diameter) + offset
    return [(int(a), int(b)) for a, b in pairs]
