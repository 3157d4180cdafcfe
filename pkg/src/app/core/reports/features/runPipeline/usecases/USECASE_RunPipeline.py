from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.reports.features.runPipeline.interfaces.INTERFACE_HELPER_RunPipeline import (
    INTERFACE_HELPER_RunPipeline,
)
from src.app.core.reports.features.runPipeline.schemas.INPUT_RunPipeline import INPUT_RunPipeline
from src.app.core.reports.features.runPipeline.schemas.OUTPUT_RunPipeline import (
    OUTPUT_RunPipeline,
)
from src.app.core.reports.functions.pipeline import STAGES
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_RunPipeline(AbstractUsecase):
    """
    Usecase for a full verification run.

    Loads the run configuration, builds or reads the geometry, runs the
    stages in their fixed order and writes the JSON report.
    """

    def __init__(self, usecase_helper: INTERFACE_HELPER_RunPipeline, logger: LoggerService):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_RunPipeline) -> OUTPUT_RunPipeline:
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] Report run for {input.config_path}")
        self._logger.info(f"{'='*60}")

        config = await self._helper.load_config(input.config_path, input.seed)
        state = await self._helper.prepare(config)

        stages_run = []
        for stage in STAGES:
            self._logger.info(f"[STAGE] {stage}")
            if await self._helper.run_stage(state, stage):
                stages_run.append(stage)
            else:
                self._logger.debug(f"[STAGE] {stage} skipped")

        report = await self._helper.finish(state)
        out = input.out or config.output
        if out:
            await self._helper.write(report, out)

        self._logger.info(
            f"[USECASE] {len(report.assertions)} assertions, {len(report.anomalies)} anomalies, "
            f"{len(report.observations)} observations, {len(report.notices)} notices"
        )
        return OUTPUT_RunPipeline(report=report, out=out, stages_run=stages_run)
