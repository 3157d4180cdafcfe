from typing import Optional

from pydantic import model_validator

from src.app.core.origin.entities.base_class import BaseClass


class INPUT_AnalyseCode(BaseClass):
    path: str
    p: int
    min_weight: bool = False
    w_max: Optional[int] = None
    classify: bool = False
    allow_expensive: bool = False

    @model_validator(mode="after")
    def _positive_w_max(self) -> "INPUT_AnalyseCode":
        if self.w_max is not None and self.w_max < 1:
            raise ValueError(f"w_max must be positive, got {self.w_max}")
        return self
