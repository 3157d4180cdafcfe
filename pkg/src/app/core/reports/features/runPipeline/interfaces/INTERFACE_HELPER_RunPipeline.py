from abc import ABC, abstractmethod
from typing import Optional

from src.app.core.reports.entities.PipelineState import PipelineState
from src.app.core.reports.entities.Report import Report
from src.app.core.reports.entities.RunConfig import RunConfig


class INTERFACE_HELPER_RunPipeline(ABC):
    """
    Steps of one report run. The usecase drives the stage loop so that
    every stage is logged on its own.
    """

    @abstractmethod
    async def load_config(self, path: str, seed: Optional[int]) -> RunConfig:
        """
        Raises:
            ConfigException: unreadable or invalid configuration
        """
        pass

    @abstractmethod
    async def prepare(self, config: RunConfig) -> PipelineState:
        """
        Raises:
            ConfigException: the gonality cannot be determined
            ConstructionException, GpgFormatException: the geometry cannot be loaded
        """
        pass

    @abstractmethod
    async def run_stage(self, state: PipelineState, stage: str) -> bool:
        """Returns False when the stage was skipped."""
        pass

    @abstractmethod
    async def finish(self, state: PipelineState) -> Report:
        pass

    @abstractmethod
    async def write(self, report: Report, path: str) -> None:
        """
        Raises:
            ConfigException: the output path cannot be written
        """
        pass
