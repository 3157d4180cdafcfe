from typing import Optional

from src.app.core.origin.entities.base_class import FrozenClass


class OrderParams(FrozenClass):
    """Gonality n and order (s, t): s+1 points per line, t+1 lines per point."""

    n: int
    s: int
    t: int

    @property
    def m(self) -> Optional[int]:
        return self.n // 2 if self.n % 2 == 0 else None

    @property
    def is_thick(self) -> bool:
        return self.s >= 2 and self.t >= 2
