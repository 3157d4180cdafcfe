"""
Tests for the incidence-graph distance table, spheres and opposite pairs.
"""

import numpy as np
import pytest

from src.app.core.geometry.exceptions.GeometryException import (
    DisconnectedGeometryException,
    GeometryException,
)
from src.app.core.geometry.functions.distances import distances
from src.app.core.geometry.functions.geometry_build import geometry_build
from src.app.core.geometry.functions.spheres import (
    closest_point_on_line,
    opposite_pairs,
    point_ball,
    sphere,
)
from src.app.infra.workers.contracts.thread_pool_worker_contract_v0 import (
    ThreadPoolWorkerContractV0,
)


class TestDistances:

    # ==================== Success Cases ====================

    def test_ordinary_quadrangle(self, quadrangle_oracle):
        """The ordinary 4-gon has diameter 4 and girth 8."""
        assert quadrangle_oracle.diameter == 4
        assert quadrangle_oracle.girth == 8
        assert quadrangle_oracle.m == 2
        assert quadrangle_oracle(0, 2) == 4
        assert quadrangle_oracle(0, 1) == 2

    def test_symplectic_quadrangle(self, w2_oracle):
        """W(2) has diameter 4 and girth 8."""
        assert w2_oracle.diameter == 4
        assert w2_oracle.girth == 8
        assert w2_oracle.n == 4

    def test_girth_cycle_is_a_closed_walk(self, w2, w2_oracle):
        """Consecutive vertices of the witness cycle are incident."""
        cycle = w2_oracle.girth_cycle

        assert len(cycle) == w2_oracle.girth
        assert len(set(cycle)) == len(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert b in w2.neighbours(a)

    def test_table_is_symmetric(self, w2_oracle):
        """d(x, y) = d(y, x) with zeros on the diagonal."""
        dist = w2_oracle.dist

        assert np.array_equal(dist, dist.T)
        assert not np.diag(dist).any()

    def test_forest_has_no_girth(self):
        """A single line is a tree."""
        oracle = distances(geometry_build([(0, 1)], 2))

        assert oracle.girth is None
        assert oracle.girth_cycle == ()
        assert oracle.diameter == 2

    def test_worker_pool_gives_the_same_table(self, w2, w2_oracle):
        """Chunked rows are stacked in source order."""
        pooled = distances(w2, ThreadPoolWorkerContractV0(4))

        assert np.array_equal(pooled.dist, w2_oracle.dist)
        assert pooled.girth_cycle == w2_oracle.girth_cycle

    # ==================== Exception Cases ====================

    def test_disconnected_geometry(self):
        """Two disjoint lines cannot be measured."""
        with pytest.raises(DisconnectedGeometryException) as exc_info:
            distances(geometry_build([(0, 1), (2, 3)], 4))

        assert exc_info.value.witness[0] == 0


class TestSpheres:

    # ==================== Success Cases ====================

    def test_point_spheres_in_w2(self, w2_oracle, w2):
        """A point of W(2) has 3 lines, 6 collinear points and 8 opposite points."""
        assert len(sphere(w2, w2_oracle, 0, 1, "lines")) == 3
        assert len(sphere(w2, w2_oracle, 0, 2, "points")) == 6
        assert len(sphere(w2, w2_oracle, 0, 4, "points")) == 8
        assert len(sphere(w2, w2_oracle, 0, 2, "points", cumulative=True)) == 7

    def test_negative_radius_is_empty(self, w2, w2_oracle):
        """P_{-1}(x) is empty."""
        assert sphere(w2, w2_oracle, 0, -1) == []

    def test_point_ball_mask(self, quadrangle_oracle):
        """P_{<=2}(0) in the ordinary quadrangle is {0, 1, 3}."""
        assert np.flatnonzero(point_ball(quadrangle_oracle, 0, 2)).tolist() == [0, 1, 3]

    def test_closest_point_on_line(self, quadrangle, quadrangle_oracle):
        """Point 0 is nearest to point 1 on line {1, 2}."""
        assert closest_point_on_line(quadrangle, quadrangle_oracle, 0, 1) == 1
        assert closest_point_on_line(quadrangle, quadrangle_oracle, 0, 0) == 0

    def test_opposite_pairs(self, quadrangle, quadrangle_oracle):
        """Ordered opposite pairs of points and of lines."""
        assert opposite_pairs(quadrangle, quadrangle_oracle) == [(0, 2), (1, 3), (2, 0), (3, 1)]
        assert opposite_pairs(quadrangle, quadrangle_oracle, "line-line") == [
            (4, 6),
            (5, 7),
            (6, 4),
            (7, 5),
        ]

    # ==================== Exception Cases ====================

    def test_sphere_rejects_unknown_element(self, quadrangle, quadrangle_oracle):
        """Vertex ids stop at P + L - 1."""
        with pytest.raises(GeometryException):
            sphere(quadrangle, quadrangle_oracle, 8, 1)

    def test_closest_point_needs_a_point(self, quadrangle, quadrangle_oracle):
        """A line vertex is refused."""
        with pytest.raises(GeometryException):
            closest_point_on_line(quadrangle, quadrangle_oracle, 4, 0)
