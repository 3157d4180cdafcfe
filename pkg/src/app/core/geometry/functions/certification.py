"""
Certification of generalised polygons through their incidence graph.

A geometry is a weak generalised n-gon exactly when every element has
degree at least 2 and the incidence graph has diameter n and girth 2n.
"""

from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from src.app.core.geometry.entities.AxiomReport import AxiomReport, Violation
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.geometry.exceptions.GeometryException import (
    DisconnectedGeometryException,
    GeometryException,
    PolygonCertificationException,
)
from src.app.core.geometry.functions.distances import distances
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.infra.workers.interfaces.worker_service import WorkerService

INTERSECTION_CHECK_MAX_VERTICES = 200


def detect_order(geometry: Geometry, n: int) -> Optional[OrderParams]:
    sizes = set(geometry.line_sizes())
    degrees = set(geometry.point_degrees())
    if len(sizes) != 1 or len(degrees) != 1:
        return None
    return OrderParams(n=n, s=sizes.pop() - 1, t=degrees.pop() - 1)


def _order_violation(geometry: Geometry) -> Violation:
    sizes = geometry.line_sizes()
    degrees = geometry.point_degrees()
    witness = []
    if len(set(sizes)) > 1:
        odd = next(j for j, k in enumerate(sizes) if k != sizes[0])
        witness = [geometry.vertex_of_line(0), geometry.vertex_of_line(odd)]
    elif len(set(degrees)) > 1:
        witness = [0, next(p for p, k in enumerate(degrees) if k != degrees[0])]
    return Violation(
        kind="order",
        message=f"line sizes {sorted(set(sizes))}, point degrees {sorted(set(degrees))}",
        witness=witness,
    )


def verify_polygon(
    geometry: Geometry,
    n: int,
    oracle: Optional[DistanceOracle] = None,
    workers: Optional[WorkerService] = None,
) -> AxiomReport:
    """
    Certify `geometry` as a weak generalised n-gon with an order.

    Failures are collected as violations with witness vertices; nothing is
    raised for a geometry that simply is not a polygon.
    """
    if n < 3:
        raise GeometryException(f"gonality must be at least 3, got {n}")
    violations: List[Violation] = []

    if geometry.num_points < 2:
        violations.append(Violation(kind="size", message="fewer than two points"))

    low = [v for v in range(geometry.num_vertices) if len(geometry.neighbours(v)) < 2]
    if low:
        violations.append(
            Violation(kind="degree", message=f"{len(low)} element(s) of degree < 2", witness=low[:10])
        )

    order = detect_order(geometry, n)
    if order is None:
        violations.append(_order_violation(geometry))

    vertex_degrees = [len(geometry.neighbours(v)) for v in range(geometry.num_vertices)]
    is_thick = min(vertex_degrees) >= 3

    try:
        oracle = oracle or distances(geometry, workers)
    except DisconnectedGeometryException as e:
        violations.append(Violation(kind="connectivity", message=str(e), witness=e.witness))
        return AxiomReport(
            n=n,
            passed=False,
            has_order=order is not None,
            order=order,
            is_thick=is_thick,
            violations=violations,
        )

    diameter_ok = oracle.diameter == n
    if not diameter_ok:
        a, b = (int(v) for v in np.argwhere(oracle.dist == oracle.diameter)[0])
        violations.append(
            Violation(
                kind="diameter",
                message=f"diameter {oracle.diameter} != {n}",
                witness=[a, b],
            )
        )

    girth_ok = oracle.girth == 2 * n
    if not girth_ok:
        violations.append(
            Violation(
                kind="girth",
                message=f"girth {oracle.girth} != {2 * n}",
                witness=list(oracle.girth_cycle),
            )
        )

    return AxiomReport(
        n=n,
        passed=not violations,
        has_order=order is not None,
        order=order,
        diameter=oracle.diameter,
        girth=oracle.girth,
        diameter_ok=diameter_ok,
        girth_ok=girth_ok,
        is_thick=is_thick,
        violations=violations,
    )


def check_intersections(
    geometry: Geometry,
    oracle: DistanceOracle,
    max_vertices: int = INTERSECTION_CHECK_MAX_VERTICES,
) -> List[Violation]:
    """
    Exhaustively test the ball-intersection identities of a 2m-gon.

    For elements y1, y2 with d(x, y_i) = d1 and d(y1, y2) = 2 d1:
        ball(x, d2 - d1) == ball(y1, d2) & ball(y2, d2)
    for d1 in 1..m-1 and d2 in 1..2m-d1-1 ("adjacent" is d1 = 1), plus the
    point-restricted versions around a line: two disjoint lines M1, M2
    meeting L, and two points v1, v2 of L.

    Raises:
        CostGuardExceededException: the geometry has more than `max_vertices` vertices
    """
    if geometry.num_vertices > max_vertices:
        raise CostGuardExceededException(
            f"intersection checks are limited to {max_vertices} vertices, got {geometry.num_vertices}"
        )
    dist = oracle.dist
    m = oracle.m
    P = geometry.num_points
    violations: List[Violation] = []

    def balls(x: int, radii: np.ndarray) -> np.ndarray:
        return dist[x][None, :] <= radii[:, None]

    for x in range(geometry.num_vertices):
        for d1 in range(1, m):
            ring = np.flatnonzero(dist[x] == d1)
            radii = np.arange(1, 2 * m - d1)
            for y1, y2 in combinations(ring, 2):
                if dist[y1, y2] != 2 * d1:
                    continue
                expected = balls(x, radii - d1)
                found = balls(y1, radii) & balls(y2, radii)
                bad = np.flatnonzero((expected != found).any(axis=1))
                if bad.size:
                    violations.append(
                        Violation(
                            kind="intersection",
                            message=f"d1={d1}, d2={int(radii[bad[0]])}",
                            witness=[x, int(y1), int(y2)],
                        )
                    )

    for line in range(geometry.num_lines):
        L = geometry.vertex_of_line(line)
        radii = np.arange(1, m)
        near_lines = [M for M in np.flatnonzero(dist[L] == 2) if M >= P]
        for M1, M2 in combinations(near_lines, 2):
            if dist[M1, M2] != 4:
                continue
            expected = balls(L, 2 * radii - 3)[:, :P]
            found = (balls(M1, 2 * radii - 1) & balls(M2, 2 * radii - 1))[:, :P]
            if (expected != found).any():
                violations.append(
                    Violation(kind="intersection-lines", message=f"line {line}", witness=[L, int(M1), int(M2)])
                )
        for v1, v2 in combinations(geometry.lines[line], 2):
            expected = balls(L, 2 * radii - 1)[:, :P]
            found = (balls(v1, 2 * radii) & balls(v2, 2 * radii))[:, :P]
            if (expected != found).any():
                violations.append(
                    Violation(kind="intersection-points", message=f"line {line}", witness=[L, v1, v2])
                )
    return violations


def certify_polygon(
    geometry: Geometry,
    n: Optional[int] = None,
    workers: Optional[WorkerService] = None,
) -> Tuple[DistanceOracle, OrderParams]:
    """
    Distances and order of a geometry that must be a generalised n-gon.
    Without n, the diameter of the incidence graph is taken as the gonality.

    Raises:
        DisconnectedGeometryException: the incidence graph is not connected
        PolygonCertificationException: some axiom fails
    """
    oracle = distances(geometry, workers)
    report = verify_polygon(geometry, n or oracle.diameter, oracle=oracle, workers=workers)
    if not report.passed:
        details = "; ".join(v.message for v in report.violations[:3])
        raise PolygonCertificationException(
            f"{geometry.label or 'geometry'} is not a generalised {report.n}-gon with an order: {details}",
            violations=report.violations,
        )
    return oracle, report.order
