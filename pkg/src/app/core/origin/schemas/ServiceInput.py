"""
Generic service input wrapper that encapsulates the request context and usecase input.
"""

from dataclasses import dataclass
from typing import Generic, Optional, TypeVar

I = TypeVar("I")


@dataclass
class ServiceInput(Generic[I]):
    """
    Generic service input wrapper.

    Attributes:
        data: The usecase-specific input data
        command: Name of the CLI command that produced the request (for logging)
    """

    data: I
    command: Optional[str] = None
