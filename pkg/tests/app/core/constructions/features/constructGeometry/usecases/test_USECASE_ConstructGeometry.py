"""
Tests for USECASE_ConstructGeometry and its service.
"""

import pytest
from unittest.mock import Mock, AsyncMock

from src.app.core.constructions.exceptions.ConstructionException import ConstructionException
from src.app.core.constructions.features.constructGeometry.schemas.INPUT_ConstructGeometry import (
    INPUT_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.services.SERVICE_ConstructGeometry import (
    SERVICE_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.usecases.USECASE_ConstructGeometry import (
    USECASE_ConstructGeometry,
)
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class TestUSECASE_ConstructGeometry:

    @pytest.fixture
    def mock_logger(self):
        """Mock logger service."""
        return Mock()

    @pytest.fixture
    def mock_helper(self, w2):
        """Mock helper that builds W(2)."""
        helper = Mock()
        helper.build = AsyncMock(return_value=w2)
        helper.gonality = AsyncMock(return_value=4)
        helper.export = AsyncMock(return_value=None)
        return helper

    @pytest.fixture
    def usecase(self, mock_helper, mock_logger):
        """Create usecase with mocked dependencies."""
        return USECASE_ConstructGeometry(mock_helper, mock_logger)

    # ==================== Success Cases ====================

    @pytest.mark.asyncio
    async def test_execute_builds_without_writing(self, usecase, mock_helper):
        """Without `out` nothing is exported."""
        result = await usecase.execute(INPUT_ConstructGeometry(family="wq", q=2))

        assert result.label == "W(2)"
        assert result.n == 4
        assert (result.num_points, result.num_lines) == (15, 15)
        assert result.out is None
        mock_helper.build.assert_called_once_with("wq", 2, False)
        mock_helper.export.assert_not_called()

    @pytest.mark.asyncio
    async def test_execute_exports_to_out(self, usecase, mock_helper, w2):
        """With `out` the built geometry is written there."""
        result = await usecase.execute(INPUT_ConstructGeometry(family="wq", q=2, out="w2.gpg"))

        mock_helper.export.assert_called_once_with(w2, "w2.gpg")
        assert result.out == "w2.gpg"

    @pytest.mark.asyncio
    async def test_execute_passes_duality(self, usecase, mock_helper):
        """The dual flag reaches the builder."""
        result = await usecase.execute(INPUT_ConstructGeometry(family="q5minus", q=2, dual=True))

        mock_helper.build.assert_called_once_with("q5minus", 2, True)
        assert result.dual is True

    # ==================== Exception Cases ====================

    @pytest.mark.asyncio
    async def test_service_maps_unsupported_q(self, mock_helper):
        """An unsupported q becomes a validation error."""
        mock_helper.build.side_effect = ConstructionException("unsupported q=6")
        service = SERVICE_ConstructGeometry(
            dependencies=ServiceDependency(logger=Mock(), workers=Mock()),
            helpers={SERVICE_ConstructGeometry.HELPER_KEY: mock_helper},
        )

        output = await service.run(ServiceInput(data=INPUT_ConstructGeometry(family="wq", q=6)))

        assert output.status == ServiceStatus.VALIDATION_ERROR
        assert output.error_message == "unsupported q=6"

    @pytest.mark.asyncio
    async def test_service_maps_failed_self_check(self, mock_helper):
        """A construction that fails its own certification exits 1."""
        mock_helper.build.side_effect = ConstructionException.certification_failed("H(2) failed")
        service = SERVICE_ConstructGeometry(
            dependencies=ServiceDependency(logger=Mock(), workers=Mock()),
            helpers={SERVICE_ConstructGeometry.HELPER_KEY: mock_helper},
        )

        output = await service.run(ServiceInput(data=INPUT_ConstructGeometry(family="hexagon", q=2)))

        assert output.status == ServiceStatus.CERTIFICATION_FAILURE
        assert output.exit_code == 1
