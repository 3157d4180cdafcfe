from typing import Literal, Tuple

from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.origin.entities.base_class import FrozenClass

PerpVariant = Literal["literal", "augmented"]


class PerpGeometry(FrozenClass):
    """
    Geometry on P_2(x) (plus x itself in the augmented variant) whose lines
    are the lines through x and the distinct traces T_{2,x,y}.

    `point_map[i]` is the original point behind perp point i.
    """

    base_point: int
    variant: PerpVariant
    geometry: Geometry
    point_map: Tuple[int, ...]
    num_trace_lines: int
