"""
Tests for the polynomial helpers and lookup tables behind GF(p^h).
"""

import itertools

import pytest

from src.app.core.fields.functions.field_tables import (
    build_tables,
    default_modulus,
    first_irreducible,
    is_irreducible,
    mul_raw,
)


class TestPolynomials:

    # ==================== Irreducibility ====================

    def test_fixed_moduli_are_irreducible(self):
        """Every fixed modulus passes the irreducibility check."""
        for p, h in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]:
            assert is_irreducible(default_modulus(p, h), p) is True

    def test_reducible_quartic(self):
        """(x^2 + x + 1)^2 = x^4 + x^2 + 1 has no root but is reducible."""
        assert is_irreducible((1, 0, 1, 0, 1), 2) is False

    def test_first_irreducible_over_gf5(self):
        """x^3 + x + 1 is the first monic irreducible cubic over GF(5)."""
        assert first_irreducible(5, 3) == (1, 1, 0, 1)


class TestBuildTables:

    # ==================== Log and Exp Tables ====================

    def test_exp_table_is_doubled(self):
        """exp has period q - 1 and covers twice the multiplicative order."""
        tables = build_tables(2, 3, default_modulus(2, 3))

        assert len(tables.exp) == 14
        assert list(tables.exp[7:]) == list(tables.exp[:7])
        assert sorted(tables.exp[:7]) == list(range(1, 8))

    @pytest.mark.parametrize("p, h", [(2, 2), (2, 3), (3, 2), (5, 2)])
    def test_log_tables_agree_with_polynomial_multiplication(self, p, h):
        """exp[log a + log b] matches the table-free product for every pair."""
        modulus = default_modulus(p, h)
        tables = build_tables(p, h, modulus)

        for a, b in itertools.product(range(1, p**h), repeat=2):
            assert tables.exp[tables.log[a] + tables.log[b]] == mul_raw(a, b, p, h, modulus)

    def test_inverse_table(self):
        """a * inv[a] = 1 in GF(9)."""
        modulus = default_modulus(3, 2)
        tables = build_tables(3, 2, modulus)

        assert all(mul_raw(a, int(tables.inv[a]), 3, 2, modulus) == 1 for a in range(1, 9))

    def test_prime_field_has_no_log_tables(self):
        """GF(p) inverts directly and skips log/exp."""
        tables = build_tables(7, 1, ())

        assert tables.log is None and tables.exp is None
        assert int(tables.inv[3]) == 5
