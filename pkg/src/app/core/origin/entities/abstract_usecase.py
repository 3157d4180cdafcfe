from abc import ABC, abstractmethod
from typing import Generic, TypeVar

I = TypeVar("I")
O = TypeVar("O")


class AbstractUsecase(ABC, Generic[I, O]):
    """
    One command's workflow: a validated INPUT schema in, an OUTPUT record out.

    Expected failures are raised as AppException subclasses. Anomalies found
    along the way are carried in the output so the service can judge them.
    """

    @abstractmethod
    async def execute(self, input: I) -> O: ...
