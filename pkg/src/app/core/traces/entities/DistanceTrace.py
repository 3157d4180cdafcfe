from typing import List, Tuple

from src.app.core.origin.entities.base_class import FrozenClass


class TraceRef(FrozenClass):
    """Parameters (d, x, y) of a distance trace; x and y are vertex ids."""

    d: int
    x: int
    y: int

    def key(self) -> Tuple[int, int, int]:
        return self.d, self.x, self.y


class DistanceTrace(FrozenClass):
    """
    T_{d,x,y} = P_d(x) & P_{2m-d}(y) for opposite elements x, y.

    x and y are points when d is even and lines when d is odd.
    """

    d: int
    x: int
    y: int
    points: Tuple[int, ...]

    @property
    def ref(self) -> TraceRef:
        return TraceRef(d=self.d, x=self.x, y=self.y)

    @property
    def size(self) -> int:
        return len(self.points)

    def point_list(self) -> List[int]:
        return list(self.points)
