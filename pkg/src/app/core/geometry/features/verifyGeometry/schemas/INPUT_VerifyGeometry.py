from src.app.core.origin.entities.base_class import BaseClass


class INPUT_VerifyGeometry(BaseClass):
    path: str
    n: int
