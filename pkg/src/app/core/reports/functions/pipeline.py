"""
The verification pipeline behind `gpcode report`.

Stages run in a fixed order and each one adds to a single Report. A stage
whose check is not requested is skipped; certification always runs, and a
geometry that fails it stops every later stage.
"""

import json
import time
from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import ValidationError

from src.app.core.constructions.functions.families import build_family, family_gonality
from src.app.core.constructions.functions.gpg_format import import_gpg
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.reports.entities.PipelineState import PipelineState
from src.app.core.reports.entities.Report import FieldBlock, Report
from src.app.core.reports.entities.RunConfig import RunConfig
from src.app.core.reports.exceptions.ConfigException import ConfigException
from src.app.core.reports.functions.stages import STAGE_FUNCTIONS
from src.app.infra.workers.interfaces.worker_service import WorkerService

STAGES = ("axioms", "cx", "minwt", "classification", "blocking", "perp", "dual")

# check name in RunConfig.checks that enables each stage
STAGE_CHECK: Dict[str, str] = {
    "axioms": "axioms",
    "cx": "cx",
    "minwt": "minwt",
    "classification": "traces",
    "blocking": "blocking",
    "perp": "perp",
    "dual": "dualwt",
}


def load_run_config(source: Union[str, Path], seed: Optional[int] = None) -> RunConfig:
    """
    Read a JSON run configuration; `seed` replaces the configured one.

    Raises:
        ConfigException: unreadable file, invalid JSON or invalid fields
    """
    try:
        raw = json.loads(Path(source).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigException(f"cannot read config {source}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigException(f"config {source} is not valid JSON: {e}") from e
    try:
        config = RunConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigException(f"invalid config {source}: {e}") from e
    if seed is not None:
        config = config.model_copy(update={"seed": seed})
    return config


def load_geometry(config: RunConfig, workers: Optional[WorkerService] = None) -> Geometry:
    source = config.geometry
    if source.path is not None:
        return import_gpg(source.path)
    return build_family(source.family, source.q, dual=source.dual, workers=workers)


def expected_gonality(config: RunConfig) -> int:
    if config.n is not None:
        return config.n
    if config.geometry.family is not None:
        return family_gonality(config.geometry.family, config.geometry.q)
    raise ConfigException("a geometry read from a file needs an explicit 'n'")


def prepare_pipeline(config: RunConfig, workers: Optional[WorkerService] = None) -> PipelineState:
    """
    Raises:
        ConfigException: no gonality can be determined
        ConstructionException, GpgFormatException: the geometry cannot be loaded
    """
    n = expected_gonality(config)
    geometry = load_geometry(config, workers)
    report = Report(seed=config.seed, fields=[FieldBlock(p=p) for p in config.fields])
    return PipelineState(config=config, geometry=geometry, n=n, report=report, workers=workers)


def stage_enabled(state: PipelineState, stage: str) -> bool:
    return stage == "axioms" or state.config.wants(STAGE_CHECK[stage])


def run_stage(state: PipelineState, stage: str) -> bool:
    """Run one stage; returns False when it was skipped."""
    if state.report.aborted or not stage_enabled(state, stage):
        return False
    started = time.perf_counter()
    STAGE_FUNCTIONS[stage](state)
    state.timings[stage] = round(time.perf_counter() - started, 3)
    return True


def finish_pipeline(state: PipelineState) -> Report:
    report = state.report
    report.anomalies = [record for record in report.assertions if not record.passed]
    report.timing = dict(state.timings) if state.config.include_timing else None
    return report


def report_status(report: Report) -> ServiceStatus:
    if report.anomalies or report.aborted:
        return ServiceStatus.ANOMALY
    if report.notices:
        return ServiceStatus.COST_GUARD_EXCEEDED
    return ServiceStatus.SUCCESS


def run_pipeline(config: RunConfig, workers: Optional[WorkerService] = None) -> Report:
    state = prepare_pipeline(config, workers)
    for stage in STAGES:
        run_stage(state, stage)
    return finish_pipeline(state)
