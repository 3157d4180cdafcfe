"""
Tests for USECASE_RunPipeline and the status mapping of SERVICE_RunPipeline.
"""

import pytest
from unittest.mock import Mock, AsyncMock

from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.reports.entities.Report import CheckRecord, Report
from src.app.core.reports.entities.RunConfig import RunConfig
from src.app.core.reports.exceptions.ConfigException import ConfigException
from src.app.core.reports.features.runPipeline.schemas.INPUT_RunPipeline import INPUT_RunPipeline
from src.app.core.reports.features.runPipeline.services.SERVICE_RunPipeline import (
    SERVICE_RunPipeline,
)
from src.app.core.reports.features.runPipeline.usecases.USECASE_RunPipeline import (
    USECASE_RunPipeline,
)
from src.app.core.reports.functions.pipeline import STAGES


@pytest.fixture
def config():
    return RunConfig(geometry={"family": "wq", "q": 2}, checks=["axioms", "minwt"])


@pytest.fixture
def mock_helper(config):
    """Mock helper where only axioms and minwt run."""
    helper = Mock()
    helper.load_config = AsyncMock(return_value=config)
    helper.prepare = AsyncMock(return_value=Mock())
    helper.run_stage = AsyncMock(side_effect=lambda state, stage: stage in ("axioms", "minwt"))
    helper.finish = AsyncMock(return_value=Report())
    helper.write = AsyncMock(return_value=None)
    return helper


class TestUSECASE_RunPipeline:

    @pytest.fixture
    def usecase(self, mock_helper):
        """Create usecase with mocked dependencies."""
        return USECASE_RunPipeline(mock_helper, Mock())

    # ==================== Success Cases ====================

    @pytest.mark.asyncio
    async def test_execute_runs_stages_in_order(self, usecase, mock_helper):
        """Every stage is offered once, in order; skipped ones are dropped."""
        result = await usecase.execute(INPUT_RunPipeline(config_path="run.json"))

        offered = [call.args[1] for call in mock_helper.run_stage.call_args_list]
        assert offered == list(STAGES)
        assert result.stages_run == ["axioms", "minwt"]
        assert result.out is None
        mock_helper.write.assert_not_called()

    @pytest.mark.asyncio
    async def test_execute_passes_seed(self, usecase, mock_helper):
        """The command-line seed reaches the config loader."""
        await usecase.execute(INPUT_RunPipeline(config_path="run.json", seed=9))

        mock_helper.load_config.assert_called_once_with("run.json", 9)

    @pytest.mark.asyncio
    async def test_execute_writes_to_out(self, usecase, mock_helper):
        """An explicit out path wins over the config."""
        mock_helper.load_config.return_value = RunConfig(
            geometry={"family": "wq", "q": 2}, output="from-config.json"
        )

        result = await usecase.execute(INPUT_RunPipeline(config_path="run.json", out="report.json"))

        assert result.out == "report.json"
        mock_helper.write.assert_called_once()
        assert mock_helper.write.call_args.args[1] == "report.json"

    @pytest.mark.asyncio
    async def test_execute_falls_back_to_config_output(self, usecase, mock_helper):
        """Without out the config's own output is used."""
        mock_helper.load_config.return_value = RunConfig(
            geometry={"family": "wq", "q": 2}, output="from-config.json"
        )

        result = await usecase.execute(INPUT_RunPipeline(config_path="run.json"))

        assert result.out == "from-config.json"

    # ==================== Exception Cases ====================

    @pytest.mark.asyncio
    async def test_execute_bad_config(self, usecase, mock_helper):
        """A config error stops before the geometry is built."""
        mock_helper.load_config.side_effect = ConfigException("invalid run configuration")

        with pytest.raises(ConfigException):
            await usecase.execute(INPUT_RunPipeline(config_path="run.json"))

        mock_helper.prepare.assert_not_called()


class TestSERVICE_RunPipeline:

    @pytest.fixture
    def service(self, mock_helper):
        return SERVICE_RunPipeline(
            dependencies=ServiceDependency(logger=Mock(), workers=Mock()),
            helpers={SERVICE_RunPipeline.HELPER_KEY: mock_helper},
        )

    # ==================== Status Mapping ====================

    @pytest.mark.asyncio
    async def test_clean_report(self, service):
        """No anomalies or notices exit 0."""
        output = await service.run(ServiceInput(data=INPUT_RunPipeline(config_path="run.json")))

        assert output.status == ServiceStatus.SUCCESS
        assert output.exit_code == 0

    @pytest.mark.asyncio
    async def test_anomalies_name_their_checks(self, service, mock_helper):
        """The message lists the failing checks."""
        mock_helper.finish.return_value = Report(
            anomalies=[CheckRecord(check="cx.all_eq", passed=False, field=2)]
        )

        output = await service.run(ServiceInput(data=INPUT_RunPipeline(config_path="run.json")))

        assert output.status == ServiceStatus.ANOMALY
        assert output.error_message == "cx.all_eq"
        assert output.data.report.anomalies[0].field == 2

    @pytest.mark.asyncio
    async def test_aborted_run(self, service, mock_helper):
        """An aborted run reports its reason."""
        mock_helper.finish.return_value = Report(aborted=True, abort_reason="axioms failed")

        output = await service.run(ServiceInput(data=INPUT_RunPipeline(config_path="run.json")))

        assert output.status == ServiceStatus.ANOMALY
        assert output.error_message == "axioms failed"

    @pytest.mark.asyncio
    async def test_notices_only(self, service, mock_helper):
        """Cost guards alone exit 3 and keep the report."""
        mock_helper.finish.return_value = Report(notices=["blocking.converse: cap of 10"])

        output = await service.run(ServiceInput(data=INPUT_RunPipeline(config_path="run.json")))

        assert output.status == ServiceStatus.COST_GUARD_EXCEEDED
        assert output.exit_code == 3
        assert output.data is not None

    @pytest.mark.asyncio
    async def test_config_error(self, service, mock_helper):
        """An invalid config exits 2."""
        mock_helper.load_config.side_effect = ConfigException("invalid run configuration")

        output = await service.run(ServiceInput(data=INPUT_RunPipeline(config_path="run.json")))

        assert output.status == ServiceStatus.VALIDATION_ERROR
        assert output.exit_code == 2
