from typing import Optional

from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.traces.entities.PerpGeometry import PerpVariant


class INPUT_AnalysePerp(BaseClass):
    path: str
    variant: PerpVariant = "augmented"
    # every point when unset
    point: Optional[int] = None
    n: Optional[int] = None
