"""
Tests for the weighted vectors c_v and their identities.
"""

import pytest

from src.app.core.codes.exceptions.CodeException import CodeException
from src.app.core.codes.functions.code_build import code_build
from src.app.core.codes.functions.low_weight import min_weight
from src.app.core.codes.functions.weighted_vectors import (
    check_all_eq,
    check_covered_lines,
    check_cx_support,
    check_min_word_lemmas,
    cx_coefficients,
    verify_cx_dual,
    verify_cx_line,
    weighted_vector,
)
from src.app.core.fields.functions.field_operations import field_make
from src.app.core.geometry.functions.distances import distances


class TestCxCoefficients:

    # ==================== Success Cases ====================

    @pytest.mark.parametrize(
        "s, m, p, expected",
        [(2, 2, 2, [1, 1]), (2, 2, 3, [2, 1]), (1, 3, 2, [1, 0, 1]), (2, 3, 5, [3, 4, 1])],
    )
    def test_coefficients(self, s, m, p, expected):
        """Coefficient on P_2k(v) is sum_{j<m-k} (-s)^j in the field."""
        assert cx_coefficients(s, m, field_make(p)) == expected

    def test_w2_vector_over_gf2_is_the_ball(self, w2, w2_oracle):
        """Over GF(2) c_v is the indicator of P_{<=2}(v)."""
        cx = weighted_vector(w2, w2_oracle, 0, field_make(2))

        assert cx.weight == 7
        assert cx.values[0] == 1

    def test_ordinary_hexagon_skips_the_middle_sphere(self, hexagon6, hexagon6_oracle):
        """s = 1, m = 3 over GF(2) puts weight on P_0 and P_4 only."""
        cx = weighted_vector(hexagon6, hexagon6_oracle, 0, field_make(2))

        assert cx.support == [0, 2, 4]

    # ==================== Exception Cases ====================

    def test_line_vertex_is_refused(self, w2, w2_oracle):
        """c_v is defined for points."""
        with pytest.raises(CodeException):
            weighted_vector(w2, w2_oracle, 15, field_make(2))

    def test_odd_gonality_is_refused(self, fano):
        """Projective planes have odd diameter."""
        with pytest.raises(CodeException):
            weighted_vector(fano, distances(fano), 0, field_make(2))


class TestCxIdentities:

    # ==================== Success Cases ====================

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_every_line_pairs_to_one(self, w2, w2_oracle, p):
        """<c_v, i_L> = 1 for all points v and lines L of W(2)."""
        code = code_build(w2, field_make(p))

        for v in range(w2.num_points):
            assert verify_cx_line(code, w2_oracle, v).holds is True

    def test_differences_lie_in_the_dual(self, w2, w2_oracle):
        """c_v - c_w is orthogonal to every line."""
        code = code_build(w2, field_make(3))

        assert verify_cx_dual(code, w2_oracle, 0, 5) is True

    @pytest.mark.parametrize("p", [2, 3])
    def test_all_eq_support_and_covering(self, w2, w2_oracle, p):
        """No row, support or covering violation in W(2)."""
        code = code_build(w2, field_make(p))

        assert check_all_eq(code, w2_oracle) == []
        assert check_cx_support(code, w2_oracle) == []
        assert check_covered_lines(code, w2_oracle) == []

    def test_ordinary_hexagon_lines(self, hexagon6, hexagon6_oracle):
        """The identities hold for thin polygons too."""
        code = code_build(hexagon6, field_make(2))

        assert verify_cx_line(code, hexagon6_oracle, 3).holds is True
        assert check_cx_support(code, hexagon6_oracle) == []

    def test_min_word_lemmas_hold_for_lines(self, w2, w2_oracle):
        """The weight-3 words of W(2) over GF(2) satisfy every lemma."""
        code = code_build(w2, field_make(2))
        words = min_weight(code).words

        assert check_min_word_lemmas(code, w2_oracle, words) == []

    # ==================== Failure Cases ====================

    def test_failing_line_is_the_witness(self, w2, w2_oracle):
        """A wrong c_v reports the first line where the product is not 1."""
        code = code_build(w2, field_make(3))
        wrong = weighted_vector(w2, w2_oracle, 0, code.field).scaled(2)

        result = verify_cx_line(code, w2_oracle, 0, cx=wrong)

        assert result.holds is False
        assert result.witness_line == 0
