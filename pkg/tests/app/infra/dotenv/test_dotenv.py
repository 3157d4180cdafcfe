"""
Tests for the DotEnv settings.
"""

from src.app.infra.dotenv.entities.dotenv import DotEnv
from src.app.infra.dotenv.services.service_dotenv import get_service_dotenv, reload_service_dotenv


class TestDotEnv:

    def test_defaults(self, monkeypatch):
        """Without environment variables the documented defaults apply."""
        for name in ("GPCODE_THREADS", "GPCODE_LOG_LEVEL", "GPCODE_EXHAUSTIVE_CAP", "GPCODE_MAX_SEARCH_TERMS"):
            monkeypatch.delenv(name, raising=False)

        settings = DotEnv(_env_file=None)

        assert settings.GPCODE_THREADS == 0
        assert settings.GPCODE_LOG_LEVEL == "INFO"
        assert settings.GPCODE_EXHAUSTIVE_CAP == 200_000
        assert settings.GPCODE_MAX_SEARCH_TERMS == 20_000_000

    def test_environment_overrides(self, monkeypatch):
        """Variables from the environment are parsed to their types."""
        monkeypatch.setenv("GPCODE_THREADS", "3")
        monkeypatch.setenv("GPCODE_LOG_COLOR", "false")

        settings = DotEnv(_env_file=None)

        assert settings.GPCODE_THREADS == 3
        assert settings.GPCODE_LOG_COLOR is False

    def test_env_file(self, tmp_path, monkeypatch):
        """A .env file is read when present."""
        monkeypatch.delenv("GPCODE_EXHAUSTIVE_CAP", raising=False)
        env_file = tmp_path / ".env"
        env_file.write_text("GPCODE_EXHAUSTIVE_CAP=1000\n")

        assert DotEnv(_env_file=env_file).GPCODE_EXHAUSTIVE_CAP == 1000

    def test_reload_reads_the_environment_again(self, monkeypatch):
        """The cached settings pick up a changed variable after a reload."""
        monkeypatch.setenv("GPCODE_THREADS", "2")
        assert reload_service_dotenv().GPCODE_THREADS == 2

        monkeypatch.setenv("GPCODE_THREADS", "5")
        assert get_service_dotenv().GPCODE_THREADS == 2
        assert reload_service_dotenv().GPCODE_THREADS == 5

        monkeypatch.delenv("GPCODE_THREADS")
        reload_service_dotenv()
