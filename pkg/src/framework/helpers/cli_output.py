"""
What `gpcode` prints on stdout.

JSON (the default) is one CommandResponse document; text is a flat
`key: value` listing of the same data for reading at a terminal.
"""

import json
from typing import Any, Optional

from pydantic import BaseModel

from src.app.core.origin.schemas.ServiceOutput import ServiceOutput


class CommandResponse(BaseModel):
    command: str
    status: str
    exit_code: int
    data: Optional[Any] = None
    message: Optional[str] = None


def to_response(command: str, output: ServiceOutput) -> CommandResponse:
    data = output.data.model_dump(mode="json") if isinstance(output.data, BaseModel) else output.data
    return CommandResponse(
        command=command,
        status=output.status.value,
        exit_code=output.exit_code,
        data=data,
        message=output.error_message,
    )


def render_json(response: CommandResponse) -> str:
    return response.model_dump_json(indent=2) + "\n"


def _text_lines(value: Any, prefix: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            name = f"{prefix}.{key}" if prefix else str(key)
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.extend(_text_lines(item, name))
            else:
                lines.append(f"{name}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_text_lines(item, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {_scalar(value)}"]


def _is_flat(value: Any) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(item, (dict, list)) for item in items)


def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return "-" if value is None else str(value)


def render_text(response: CommandResponse) -> str:
    lines = [f"{response.command}: {response.status} (exit {response.exit_code})"]
    if response.message:
        lines.append(f"message: {response.message}")
    if response.data is not None:
        lines.extend(_text_lines(response.data))
    return "\n".join(lines) + "\n"


def render(response: CommandResponse, output_format: str = "json") -> str:
    return render_text(response) if output_format == "text" else render_json(response)
