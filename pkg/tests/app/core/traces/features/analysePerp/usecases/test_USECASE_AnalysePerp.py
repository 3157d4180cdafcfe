"""
Tests for USECASE_AnalysePerp and its service.
"""

import pytest
from unittest.mock import Mock, AsyncMock

from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.traces.exceptions.TraceException import TraceException
from src.app.core.traces.features.analysePerp.schemas.INPUT_AnalysePerp import INPUT_AnalysePerp
from src.app.core.traces.features.analysePerp.services.SERVICE_AnalysePerp import SERVICE_AnalysePerp
from src.app.core.traces.features.analysePerp.usecases.USECASE_AnalysePerp import USECASE_AnalysePerp


def _fano_perp():
    return Mock(geometry=Mock(num_points=7, num_lines=7), num_trace_lines=4)


@pytest.fixture
def mock_helper(w2, w2_oracle):
    """Mock helper where every perp is a projective plane."""
    helper = Mock()
    helper.load_polygon = AsyncMock(return_value=(w2, w2_oracle))
    helper.perp = AsyncMock(side_effect=lambda geometry, oracle, x, variant: _fano_perp())
    helper.is_projective = AsyncMock(return_value=True)
    helper.unblocking_opposites = AsyncMock(return_value=[])
    return helper


class TestUSECASE_AnalysePerp:

    @pytest.fixture
    def usecase(self, mock_helper):
        """Create usecase with mocked dependencies."""
        return USECASE_AnalysePerp(mock_helper, Mock())

    # ==================== Success Cases ====================

    @pytest.mark.asyncio
    async def test_execute_every_point(self, usecase, mock_helper):
        """Without a point every point of W(2) is examined."""
        result = await usecase.execute(INPUT_AnalysePerp(path="w2.gpg"))

        assert result.variant == "augmented"
        assert len(result.points) == 15
        assert result.projective_count == 15
        assert all(r.traces_blocking for r in result.points)
        assert result.anomalies() == []

    @pytest.mark.asyncio
    async def test_execute_one_point(self, usecase, mock_helper, w2, w2_oracle):
        """A chosen point and variant are passed through."""
        result = await usecase.execute(INPUT_AnalysePerp(path="w2.gpg", point=4, variant="literal"))

        assert [r.point for r in result.points] == [4]
        assert (result.points[0].perp_points, result.points[0].trace_lines) == (7, 4)
        mock_helper.perp.assert_called_once_with(w2, w2_oracle, 4, "literal")

    @pytest.mark.asyncio
    async def test_projective_point_with_unblocking_trace(self, usecase, mock_helper):
        """Only the first unblocking opposite is named."""
        mock_helper.unblocking_opposites.return_value = [9, 11]

        result = await usecase.execute(INPUT_AnalysePerp(path="w2.gpg", point=0))

        assert result.anomalies() == ["p0 is projective but T(2, p0, p9) is not X-blocking"]

    @pytest.mark.asyncio
    async def test_unblocking_trace_at_a_non_projective_point(self, usecase, mock_helper):
        """Without a plane there is nothing to contradict."""
        mock_helper.is_projective.return_value = False
        mock_helper.unblocking_opposites.return_value = [9]

        result = await usecase.execute(INPUT_AnalysePerp(path="w2.gpg", point=0))

        assert result.points[0].traces_blocking is False
        assert result.anomalies() == []

    # ==================== Exception Cases ====================

    @pytest.mark.asyncio
    async def test_point_out_of_range(self, usecase):
        """Points stop at P - 1."""
        with pytest.raises(TraceException) as exc_info:
            await usecase.execute(INPUT_AnalysePerp(path="w2.gpg", point=15))

        assert "outside 0..14" in str(exc_info.value)


class TestSERVICE_AnalysePerp:

    @pytest.fixture
    def service(self, mock_helper):
        return SERVICE_AnalysePerp(
            dependencies=ServiceDependency(logger=Mock(), workers=Mock()),
            helpers={SERVICE_AnalysePerp.HELPER_KEY: mock_helper},
        )

    # ==================== Status Mapping ====================

    @pytest.mark.asyncio
    async def test_success(self, service):
        """Consistent perps succeed."""
        output = await service.run(ServiceInput(data=INPUT_AnalysePerp(path="w2.gpg", point=0)))

        assert output.status == ServiceStatus.SUCCESS

    @pytest.mark.asyncio
    async def test_anomaly(self, service, mock_helper):
        """An unblocking trace at a projective point exits 1."""
        mock_helper.unblocking_opposites.return_value = [9]

        output = await service.run(ServiceInput(data=INPUT_AnalysePerp(path="w2.gpg", point=0)))

        assert output.status == ServiceStatus.ANOMALY
        assert output.exit_code == 1
