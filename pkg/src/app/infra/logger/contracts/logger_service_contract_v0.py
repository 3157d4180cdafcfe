import logging
import sys
from typing import Optional

from src.app.infra.dotenv.entities.dotenv import DotEnv
from src.app.infra.dotenv.services.service_dotenv import get_service_dotenv
from src.app.infra.logger.interfaces.logger_service import LoggerService


class LoggerServiceContractV0(LoggerService):

    def __init__(self, dotenv: Optional[DotEnv] = None):
        dotenv = dotenv or get_service_dotenv()
        self.logger = logging.getLogger("gpcode")
        self.logger.setLevel(dotenv.GPCODE_LOG_LEVEL.upper())
        self.logger.propagate = False

        formatter = logging.Formatter("%(asctime)s:%(levelname)s:%(message)s")

        # one set of handlers per process
        if not self.logger.handlers:
            if dotenv.GPCODE_LOG_FILE:
                file_handler = logging.FileHandler(dotenv.GPCODE_LOG_FILE)
                file_handler.setLevel(logging.ERROR)
                file_handler.setFormatter(formatter)
                self.logger.addHandler(file_handler)

            # stdout carries JSON results, so logs go to stderr
            stream_handler = logging.StreamHandler(sys.stderr)
            stream_handler.setFormatter(formatter)
            self.logger.addHandler(stream_handler)

        class bcolors:
            OKBLUE = "\033[94m"
            OKCYAN = "\033[96m"
            WARNING = "\033[93m"
            FAIL = "\033[91m"
            ENDC = "\033[0m"
            BOLD = "\033[1m"

        self.bcolors = bcolors
        self.color = dotenv.GPCODE_LOG_COLOR and sys.stderr.isatty()

    def _paint(self, color: str, payload) -> str:
        if not self.color:
            return str(payload)
        return color + str(payload) + self.bcolors.ENDC

    def set_level(self, level: str):
        self.logger.setLevel(level.upper())

    def debug(self, payload):
        self.logger.debug(self._paint(self.bcolors.OKBLUE, payload))

    def info(self, payload):
        self.logger.info(self._paint(self.bcolors.OKCYAN, payload))

    def warning(self, payload):
        self.logger.warning(self._paint(self.bcolors.WARNING, payload))

    def error(self, payload):
        self.logger.error(self._paint(self.bcolors.FAIL, payload))

    def critical(self, payload):
        self.logger.critical(self._paint(self.bcolors.BOLD, payload))
