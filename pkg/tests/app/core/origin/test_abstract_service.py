"""
Tests for AbstractService status mapping and the ServiceStatus exit codes.
"""

import pytest
from unittest.mock import Mock, AsyncMock

from src.app.core.geometry.exceptions.GeometryException import PolygonCertificationException
from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.reports.exceptions.ConfigException import ConfigException


class _EchoService(AbstractService[str, str]):

    def __init__(self, usecase):
        super().__init__(ServiceDependency(logger=Mock(), workers=Mock()))
        self.usecase = usecase

    def detect_service_name(self) -> str:
        return "Test.Echo"

    def build(self, input_data):
        return self.usecase


class TestServiceStatus:

    @pytest.mark.parametrize(
        "status, code",
        [
            (ServiceStatus.SUCCESS, 0),
            (ServiceStatus.ANOMALY, 1),
            (ServiceStatus.CERTIFICATION_FAILURE, 1),
            (ServiceStatus.VALIDATION_ERROR, 2),
            (ServiceStatus.NOT_FOUND, 2),
            (ServiceStatus.INTERNAL_ERROR, 2),
            (ServiceStatus.COST_GUARD_EXCEEDED, 3),
        ],
    )
    def test_exit_codes(self, status, code):
        """Each status has one process exit code."""
        assert status.exit_code == code

    def test_output_carries_exit_code(self):
        """ServiceOutput exposes the code of its status."""
        assert ServiceOutput.cost_guard_exceeded("cap").exit_code == 3
        assert ServiceOutput.success("x").error_message is None

    def test_exception_to_output(self):
        """An AppException becomes a failure record with its own status."""
        output = CostGuardExceededException("C(15, 3) = 455 subsets").to_output()

        assert output.status == ServiceStatus.COST_GUARD_EXCEEDED
        assert output.error_message == "C(15, 3) = 455 subsets"
        assert output.data is None


class TestAbstractService:

    @pytest.fixture
    def usecase(self):
        usecase = Mock()
        usecase.execute = AsyncMock(return_value="done")
        return usecase

    # ==================== Success Cases ====================

    @pytest.mark.asyncio
    async def test_run_success(self, usecase):
        """The default judgement is success."""
        output = await _EchoService(usecase).run(ServiceInput(data="in", command="echo"))

        assert output.status == ServiceStatus.SUCCESS
        assert output.data == "done"
        usecase.execute.assert_called_once_with("in")

    # ==================== Exception Cases ====================

    @pytest.mark.asyncio
    @pytest.mark.parametrize(
        "error, status",
        [
            (ConfigException("bad config"), ServiceStatus.VALIDATION_ERROR),
            (CostGuardExceededException("too many subsets"), ServiceStatus.COST_GUARD_EXCEEDED),
            (PolygonCertificationException("not a 4-gon"), ServiceStatus.CERTIFICATION_FAILURE),
        ],
    )
    async def test_app_exceptions_keep_their_status(self, usecase, error, status):
        """Application errors map to their own status."""
        usecase.execute.side_effect = error

        output = await _EchoService(usecase).run(ServiceInput(data="in"))

        assert output.status == status
        assert output.error_message == str(error)
        assert output.data is None

    @pytest.mark.asyncio
    async def test_unexpected_exception(self, usecase):
        """Anything else is an internal error."""
        usecase.execute.side_effect = ZeroDivisionError("division by zero")

        output = await _EchoService(usecase).run(ServiceInput(data="in"))

        assert output.status == ServiceStatus.INTERNAL_ERROR
        assert output.exit_code == 2
