"""
All-pairs distances in the incidence graph.

One breadth-first search per source vertex fills one row of the table; the
rows are computed in chunks on the worker pool and stacked in source order.
"""

import math
from collections import deque
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.exceptions.GeometryException import (
    DisconnectedGeometryException,
)
from src.app.infra.workers.interfaces.worker_service import WorkerService

Adjacency = List[Tuple[int, ...]]


def adjacency_of(geometry: Geometry) -> Adjacency:
    return [geometry.neighbours(v) for v in range(geometry.num_vertices)]


def _bfs_rows(adjacency: Adjacency, sources: Sequence[int]) -> np.ndarray:
    n = len(adjacency)
    rows = np.full((len(sources), n), -1, dtype=np.int16)
    for r, source in enumerate(sources):
        row = rows[r]
        row[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in adjacency[u]:
                if row[w] < 0:
                    row[w] = du
                    queue.append(w)
    return rows


def _shortest_cycle(dist: np.ndarray, adjacency: Adjacency) -> Tuple[Optional[int], Tuple[int, ...]]:
    """
    Girth of a bipartite graph from its distance table.

    A shortest cycle of length 2k contains vertices r, y with d(r, y) = k and
    y has two neighbours at distance k-1 from r. Conversely every such pair
    closes a cycle of length at most 2k, so the minimum over all (r, y) is
    the girth.
    """
    best: Optional[int] = None
    best_pair: Tuple[int, int] = (-1, -1)
    for y, nbrs in enumerate(adjacency):
        if len(nbrs) < 2:
            continue
        nb = np.asarray(nbrs)
        target = dist[:, y].astype(np.int32) - 1
        hits = (dist[:, nb] == target[:, None]).sum(axis=1)
        roots = np.flatnonzero(hits >= 2)
        if roots.size == 0:
            continue
        lengths = 2 * dist[roots, y].astype(np.int64)
        i = int(np.argmin(lengths))
        if best is None or lengths[i] < best:
            best = int(lengths[i])
            best_pair = (int(roots[i]), y)
    if best is None:
        return None, ()

    root, y = best_pair
    d = int(dist[root, y])
    x1, x2 = sorted(w for w in adjacency[y] if dist[root, w] == d - 1)[:2]

    def walk(start: int) -> List[int]:
        path, u = [start], start
        while u != root:
            u = min(w for w in adjacency[u] if dist[root, w] == dist[root, u] - 1)
            path.append(u)
        return path

    cycle = [y] + walk(x1) + list(reversed(walk(x2)))[1:]
    return best, tuple(cycle)


def distances(
    geometry: Geometry, workers: Optional[WorkerService] = None
) -> DistanceOracle:
    """
    Exact incidence-graph distances, diameter and girth.

    Raises:
        DisconnectedGeometryException: some vertex is unreachable
    """
    adjacency = adjacency_of(geometry)
    n = len(adjacency)
    if workers is None or workers.max_workers == 1:
        dist = _bfs_rows(adjacency, range(n))
    else:
        size = max(1, math.ceil(n / (4 * workers.max_workers)))
        chunks = [range(i, min(i + size, n)) for i in range(0, n, size)]
        dist = np.vstack(workers.map(lambda c: _bfs_rows(adjacency, c), chunks))

    unreachable = np.flatnonzero(dist[0] < 0)
    if unreachable.size:
        far = int(unreachable[0])
        raise DisconnectedGeometryException(
            f"{geometry.describe(0)} and {geometry.describe(far)} lie in different components",
            witness=[0, far],
        )

    girth, cycle = _shortest_cycle(dist, adjacency)
    dist.setflags(write=False)
    return DistanceOracle(
        num_points=geometry.num_points,
        num_lines=geometry.num_lines,
        dist=dist,
        diameter=int(dist.max()),
        girth=girth,
        girth_cycle=cycle,
    )
