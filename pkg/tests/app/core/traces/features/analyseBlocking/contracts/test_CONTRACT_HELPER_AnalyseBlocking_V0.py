"""
Tests for CONTRACT_HELPER_AnalyseBlocking_V0 against exported geometries.
"""

import pytest

from src.app.core.constructions.functions.gpg_format import export_gpg
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.core.traces.exceptions.TraceException import TraceException
from src.app.core.traces.features.analyseBlocking.contracts.CONTRACT_HELPER_AnalyseBlocking_V0 import (
    CONTRACT_HELPER_AnalyseBlocking_V0,
)


class TestCONTRACT_HELPER_AnalyseBlocking_V0:

    @pytest.fixture
    def contract(self):
        return CONTRACT_HELPER_AnalyseBlocking_V0()

    # ==================== Success Cases ====================

    @pytest.mark.asyncio
    async def test_full_analysis_of_w2(self, contract, w2_path):
        """Smallest size, converse and line checks on W(2)."""
        geometry, oracle, order = await contract.load_polygon(w2_path, None)

        min_size = await contract.min_size(geometry, oracle, order.s, None)
        converse = await contract.converse(geometry, oracle, order.s, None)
        bound, violations = await contract.line_checks(geometry, oracle, order.s, order.t)

        assert (min_size.size, min_size.certificate) == (3, "exhaustive")
        assert converse.d_histogram == {1: 15, 2: 20}
        assert (bound, violations) == (5, [])
        assert await contract.g4s(geometry, oracle, order.s) == []

    @pytest.mark.asyncio
    async def test_thin_polygon_skips_line_bound(self, contract, quadrangle, quadrangle_oracle):
        """st = 1 has neither bound nor survey."""
        assert await contract.line_checks(quadrangle, quadrangle_oracle, 1, 1) == (None, [])

    # ==================== Exception Cases ====================

    @pytest.mark.asyncio
    async def test_odd_gonality(self, contract, fano, tmp_path):
        """A projective plane has no X-blocking theory."""
        path = tmp_path / "fano.gpg"
        export_gpg(fano, path)

        with pytest.raises(TraceException) as exc_info:
            await contract.load_polygon(str(path), None)

        assert "n = 3" in str(exc_info.value)

    @pytest.mark.asyncio
    async def test_cap(self, contract, w2, w2_oracle):
        """The converse refuses 455 subsets under a cap of 100."""
        with pytest.raises(CostGuardExceededException):
            await contract.converse(w2, w2_oracle, 2, 100)
