"""
Distance traces T_{d,x,y} and the lookup of point sets against them.
"""

from collections import Counter
from typing import Iterable, List, Optional, Sequence

import numpy as np

from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.traces.entities.BlockingVerdict import TraceCensusEntry
from src.app.core.traces.entities.DistanceTrace import DistanceTrace, TraceRef
from src.app.core.traces.entities.TraceCatalog import TraceCatalog
from src.app.core.traces.exceptions.TraceException import TraceException


def _check_d(oracle: DistanceOracle, d: int) -> None:
    if not 1 <= d <= oracle.m:
        raise TraceException(f"trace distance d={d} is outside 1..{oracle.m}")


def _endpoints_kind(geometry: Geometry, d: int) -> str:
    return "points" if d % 2 == 0 else "lines"


def distance_trace(
    geometry: Geometry, oracle: DistanceOracle, d: int, x: int, y: int
) -> DistanceTrace:
    """
    Points at distance d from x and 2m-d from y.

    Raises:
        TraceException: d out of range, x and y of the wrong kind for the
            parity of d, x and y not opposite, or an empty result
    """
    _check_d(oracle, d)
    want_points = d % 2 == 0
    for v in (x, y):
        if not 0 <= v < geometry.num_vertices:
            raise TraceException(f"element {v} is outside 0..{geometry.num_vertices - 1}")
        if geometry.is_point(v) != want_points:
            raise TraceException(
                f"d={d} needs two {_endpoints_kind(geometry, d)}, got {geometry.describe(v)}"
            )
    if oracle(x, y) != 2 * oracle.m:
        raise TraceException(
            f"{geometry.describe(x)} and {geometry.describe(y)} are not opposite "
            f"(distance {oracle(x, y)})"
        )
    mask = oracle.dist[x, : geometry.num_points] == d
    mask &= oracle.dist[y, : geometry.num_points] == 2 * oracle.m - d
    points = tuple(int(p) for p in np.flatnonzero(mask))
    if not points:
        raise TraceException(f"trace ({d}, {x}, {y}) is empty")
    return DistanceTrace(d=d, x=x, y=y, points=points)


def _opposite_pairs(geometry: Geometry, oracle: DistanceOracle, d: int) -> np.ndarray:
    if d % 2 == 0:
        block, offset = oracle.point_block(), 0
    else:
        block, offset = oracle.line_block(), geometry.num_points
    return np.argwhere(block == 2 * oracle.m) + offset


def enumerate_traces(
    geometry: Geometry, oracle: DistanceOracle, d: int
) -> List[DistanceTrace]:
    """
    Every distinct trace for distance d, each labelled by its least (x, y).

    Traces come out in increasing order of that (x, y).
    """
    _check_d(oracle, d)
    pairs = _opposite_pairs(geometry, oracle, d)
    if len(pairs) == 0:
        return []
    far = 2 * oracle.m - d
    masks = (oracle.dist[pairs[:, 0], : geometry.num_points] == d) & (
        oracle.dist[pairs[:, 1], : geometry.num_points] == far
    )
    _, first = np.unique(masks, axis=0, return_index=True)
    traces = []
    for i in np.sort(first):
        points = tuple(int(p) for p in np.flatnonzero(masks[i]))
        if points:
            traces.append(
                DistanceTrace(d=d, x=int(pairs[i, 0]), y=int(pairs[i, 1]), points=points)
            )
    return traces


def build_trace_catalog(
    geometry: Geometry, oracle: DistanceOracle, ds: Optional[Iterable[int]] = None
) -> TraceCatalog:
    """Traces of every requested d (all of 1..m by default) in one index."""
    wanted = sorted(set(ds)) if ds is not None else range(1, oracle.m + 1)
    traces: List[DistanceTrace] = []
    for d in wanted:
        traces.extend(enumerate_traces(geometry, oracle, d))
    return TraceCatalog.from_traces(traces)


def classify_support(
    geometry: Geometry,
    oracle: DistanceOracle,
    support: Sequence[int],
    catalog: Optional[TraceCatalog] = None,
) -> Optional[TraceRef]:
    """(d, x, y) of a trace whose point set is exactly `support`, else None."""
    if catalog is None:
        catalog = build_trace_catalog(geometry, oracle)
    trace = catalog.lookup(support)
    return trace.ref if trace is not None else None


def trace_blocking_census(
    geometry: Geometry, oracle: DistanceOracle, catalog: TraceCatalog
) -> List[TraceCensusEntry]:
    """Per d: number of distinct traces, their sizes and how many are X-blocking."""
    opposite = oracle.opposite_points()
    census = []
    for d in range(1, oracle.m + 1):
        traces = catalog.of_distance(d)
        sizes = Counter(trace.size for trace in traces)
        blocking = sum(
            1 for trace in traces if not opposite[:, list(trace.points)].all(axis=1).any()
        )
        census.append(
            TraceCensusEntry(
                d=d,
                distinct=len(traces),
                size_histogram=dict(sorted(sizes.items())),
                blocking=blocking,
            )
        )
    return census
