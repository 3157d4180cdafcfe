from typing import Optional

from src.app.core.origin.entities.base_class import BaseClass


class INPUT_ListTraces(BaseClass):
    path: str
    d: int
    n: Optional[int] = None
