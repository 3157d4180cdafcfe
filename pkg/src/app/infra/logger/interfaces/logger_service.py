from abc import ABC, abstractmethod


class LoggerService(ABC):
    """
    Logging seen by services, usecases and helpers. Output goes to stderr;
    stdout belongs to the command result.
    """

    @abstractmethod
    def set_level(self, level: str) -> None:
        """Applies --log-level on top of GPCODE_LOG_LEVEL."""

    @abstractmethod
    def debug(self, payload: object) -> None:
        """Search sizes, chunking and per-stage internals."""

    @abstractmethod
    def info(self, payload: object) -> None:
        """Stage banners and summaries."""

    @abstractmethod
    def warning(self, payload: object) -> None:
        """Anomalies and cost-guard trips; the run continues."""

    @abstractmethod
    def error(self, payload: object) -> None:
        """A stage or command could not run."""

    @abstractmethod
    def critical(self, payload: object) -> None: ...
