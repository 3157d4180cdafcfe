from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class DotEnv(BaseSettings):
    """
    Process-wide settings, read from the environment and an optional .env file.
    """

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    """
    Settings for the worker pool
    """
    GPCODE_THREADS: int = 0  # 0 -> os.cpu_count(), 1 -> run inline

    """
    Settings for logging
    """
    GPCODE_LOG_LEVEL: str = "INFO"
    GPCODE_LOG_FILE: Optional[str] = None  # errors are also written here when set
    GPCODE_LOG_COLOR: bool = True

    """
    Cost guards for exhaustive searches
    """
    GPCODE_MAX_SEARCH_TERMS: int = 20_000_000  # (support, coefficients) terms
    GPCODE_EXHAUSTIVE_CAP: int = 200_000  # subsets in blocking-set searches
