from typing import Optional

from src.app.core.origin.entities.base_class import BaseClass


class INPUT_AnalyseBlocking(BaseClass):
    path: str
    exhaustive_cap: Optional[int] = None
    n: Optional[int] = None
