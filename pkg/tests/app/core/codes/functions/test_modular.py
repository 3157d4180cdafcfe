"""
Tests for row reduction and nullspaces over GF(p).
"""

import numpy as np

from src.app.core.codes.functions.modular import nullspace_mod, rank_mod, rref_mod


class TestModular:

    # ==================== Row Reduction ====================

    def test_rref_of_invertible_matrix(self):
        """An invertible 2x2 over GF(5) reduces to the identity."""
        reduced, pivots = rref_mod(np.array([[2, 4], [1, 3]]), 5)

        assert reduced.tolist() == [[1, 0], [0, 1]]
        assert pivots == [0, 1]

    def test_rank_drops_on_dependent_rows(self):
        """[2, 4] = 2 * [1, 2] over GF(5)."""
        assert rank_mod(np.array([[1, 2], [2, 4]]), 5) == 1

    def test_rank_depends_on_characteristic(self):
        """The all-ones 3x3 minus the identity is singular over GF(2) only."""
        a = np.ones((3, 3), dtype=np.int64) - np.eye(3, dtype=np.int64)

        assert rank_mod(a, 2) == 2
        assert rank_mod(a, 3) == 3

    def test_input_is_not_modified(self):
        """Reduction works on a copy."""
        a = np.array([[3, 1], [1, 1]])

        rref_mod(a, 2)

        assert a.tolist() == [[3, 1], [1, 1]]

    # ==================== Nullspace ====================

    def test_nullspace_of_parity_row(self):
        """x0 + x1 + x2 = 0 over GF(2) has basis (1,1,0), (1,0,1)."""
        basis = nullspace_mod(np.array([[1, 1, 1]]), 2)

        assert basis.tolist() == [[1, 1, 0], [1, 0, 1]]

    def test_nullspace_is_annihilated(self):
        """a @ basis.T vanishes modulo p."""
        a = np.array([[1, 2, 0, 1], [0, 1, 1, 2]])

        basis = nullspace_mod(a, 3)

        assert basis.shape == (2, 4)
        assert not ((a @ basis.T) % 3).any()

    def test_nullspace_of_empty_matrix(self):
        """No constraints leaves the whole space."""
        basis = nullspace_mod(np.zeros((0, 3), dtype=np.int64), 7, num_columns=3)

        assert basis.tolist() == np.eye(3, dtype=np.int64).tolist()

    def test_nullspace_of_full_rank_matrix(self):
        """An invertible matrix has a zero-row basis."""
        basis = nullspace_mod(np.eye(3, dtype=np.int64), 2)

        assert basis.shape == (0, 3)
