from pathlib import Path
from typing import Optional

from src.app.core.reports.entities.PipelineState import PipelineState
from src.app.core.reports.entities.Report import Report
from src.app.core.reports.entities.RunConfig import RunConfig
from src.app.core.reports.exceptions.ConfigException import ConfigException
from src.app.core.reports.features.runPipeline.interfaces.INTERFACE_HELPER_RunPipeline import (
    INTERFACE_HELPER_RunPipeline,
)
from src.app.core.reports.functions.pipeline import (
    finish_pipeline,
    load_run_config,
    prepare_pipeline,
    run_stage,
)
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_RunPipeline_V0(INTERFACE_HELPER_RunPipeline):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def load_config(self, path: str, seed: Optional[int]) -> RunConfig:
        config = load_run_config(path, seed)
        self._logger.info(
            f"[CONFIG] {config.geometry.describe()}, fields {config.fields}, "
            f"checks {config.checks}, seed {config.seed}"
        )
        return config

    async def prepare(self, config: RunConfig) -> PipelineState:
        state = prepare_pipeline(config, self._workers)
        self._logger.info(
            f"[{state.geometry.label}] {state.geometry.num_points} points, "
            f"{state.geometry.num_lines} lines, expected n = {state.n}"
        )
        return state

    async def run_stage(self, state: PipelineState, stage: str) -> bool:
        ran = run_stage(state, stage)
        if state.report.aborted and stage == "axioms":
            self._logger.error(f"[STAGE] {stage}: {state.report.abort_reason}")
        for notice in state.report.notices:
            if notice.startswith(stage):
                self._logger.warning(f"[STAGE] cost guard: {notice}")
        return ran

    async def finish(self, state: PipelineState) -> Report:
        report = finish_pipeline(state)
        for record in report.anomalies:
            where = f" GF({record.field})" if record.field is not None else ""
            self._logger.warning(f"[ANOMALY] {record.check}{where}: {record.detail}")
        return report

    async def write(self, report: Report, path: str) -> None:
        try:
            Path(path).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            raise ConfigException(f"cannot write report to {path}: {e}") from e
        self._logger.info(f"[REPORT] written to {path}")
