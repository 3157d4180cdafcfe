import asyncio
import traceback
from typing import Awaitable, Callable

from pydantic import ValidationError

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.infra.logger.services.service_logger import get_service_logger

logger = get_service_logger()


def handle_command(command: str, call: Callable[[], Awaitable[ServiceOutput]]) -> ServiceOutput:
    """
    Run one subcommand to completion.

    Services already turn their own failures into a ServiceOutput; this
    catches what escapes before a service runs, such as an input schema
    rejecting the command-line values.
    """
    try:
        return asyncio.run(call())
    except ValidationError as e:
        message = f"invalid arguments for {command}: {e}"
        logger.error(message)
        return ServiceOutput.validation_error(message)
    except AppException as e:
        logger.error(f"Error at command - {command} : {e}")
        return e.to_output()
    except Exception as e:
        logger.error(f"Error at command - {command} : {e}")
        logger.debug(traceback.format_exc())
        return ServiceOutput.internal_error(str(e))
