from typing import Optional

from src.app.core.origin.entities.base_class import BaseClass


class INPUT_ConstructGeometry(BaseClass):
    family: str
    q: int
    dual: bool = False
    out: Optional[str] = None
