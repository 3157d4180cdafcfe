"""
The perp geometry of a point and its projective-plane test.
"""

import itertools
from typing import List, Set, Tuple

import numpy as np

from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.functions.geometry_build import geometry_build
from src.app.core.traces.entities.PerpGeometry import PerpGeometry, PerpVariant
from src.app.core.traces.exceptions.TraceException import TraceException

QUADRANGLE_BATCH = 4096


def perp_geometry(
    geometry: Geometry,
    oracle: DistanceOracle,
    x: int,
    variant: PerpVariant = "augmented",
) -> PerpGeometry:
    """
    Points: P_2(x), plus x when augmented. Lines: the lines through x
    (cut down to P_2(x) when literal) and the distinct T_{2,x,y} for y
    opposite x. Repeated point sets are kept once.
    """
    if not geometry.is_point(x):
        raise TraceException(f"{geometry.describe(x)} is not a point")
    if variant not in ("literal", "augmented"):
        raise TraceException(f"unknown perp variant {variant!r}")
    row = oracle.dist[x, : geometry.num_points]
    members = set(int(p) for p in np.flatnonzero(row == 2))
    if variant == "augmented":
        members.add(x)
    point_map = tuple(sorted(members))
    local = {p: i for i, p in enumerate(point_map)}

    seen: Set[Tuple[int, ...]] = set()
    lines: List[Tuple[int, ...]] = []

    def add(points) -> bool:
        key = tuple(sorted(local[p] for p in points if p in local))
        if not key or key in seen:
            return False
        seen.add(key)
        lines.append(key)
        return True

    for line in geometry.lines_on_point[x]:
        add(geometry.lines[line])

    far = np.flatnonzero(row == oracle.diameter)
    near_x = row == 2
    num_traces = 0
    for y in far:
        trace = np.flatnonzero(near_x & (oracle.dist[y, : geometry.num_points] == 2 * oracle.m - 2))
        if add(int(p) for p in trace):
            num_traces += 1

    perp = geometry_build(lines, len(point_map), label=f"perp({variant}, p{x})")
    return PerpGeometry(
        base_point=x,
        variant=variant,
        geometry=perp,
        point_map=point_map,
        num_trace_lines=num_traces,
    )


def _has_quadrangle(incidence: np.ndarray) -> bool:
    """Four points, no three on a common line."""
    num_points = incidence.shape[1]
    combos = itertools.combinations(range(num_points), 4)
    while True:
        chunk = list(itertools.islice(combos, QUADRANGLE_BATCH))
        if not chunk:
            return False
        subsets = np.asarray(chunk, dtype=np.int64)
        on_line = incidence[:, subsets].sum(axis=2)  # (L, C)
        if (on_line < 3).all(axis=0).any():
            return True


def is_projective_plane(geometry: Geometry) -> bool:
    """Two points share exactly one line, two lines share exactly one point, and a quadrangle exists."""
    if geometry.num_points < 4:
        return False
    incidence = geometry.incidence_matrix()
    joins = incidence.T @ incidence
    meets = incidence @ incidence.T
    np.fill_diagonal(joins, 1)
    np.fill_diagonal(meets, 1)
    if not ((joins == 1).all() and (meets == 1).all()):
        return False
    return _has_quadrangle(incidence)


def is_projective_point(
    geometry: Geometry,
    oracle: DistanceOracle,
    x: int,
    variant: PerpVariant = "augmented",
) -> bool:
    return is_projective_plane(perp_geometry(geometry, oracle, x, variant).geometry)


def unblocking_opposites(geometry: Geometry, oracle: DistanceOracle, x: int) -> List[int]:
    """Points y opposite x whose trace T_{2,x,y} is not X-blocking."""
    if not geometry.is_point(x):
        raise TraceException(f"{geometry.describe(x)} is not a point")
    row = oracle.dist[x, : geometry.num_points]
    opposite = oracle.opposite_points()
    failing = []
    for y in np.flatnonzero(row == oracle.diameter):
        trace = (row == 2) & (oracle.dist[y, : geometry.num_points] == 2 * oracle.m - 2)
        if opposite[:, trace].all(axis=1).any():
            failing.append(int(y))
    return failing


def projective_trace_blocking_check(
    geometry: Geometry, oracle: DistanceOracle, x: int
) -> bool:
    """True when every T_{2,x,y} with y opposite x is X-blocking."""
    return not unblocking_opposites(geometry, oracle, x)
