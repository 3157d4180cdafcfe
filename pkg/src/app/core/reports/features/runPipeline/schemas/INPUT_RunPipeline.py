from typing import Optional

from src.app.core.origin.entities.base_class import BaseClass


class INPUT_RunPipeline(BaseClass):
    config_path: str
    # falls back to the config's own `output`
    out: Optional[str] = None
    seed: Optional[int] = None
