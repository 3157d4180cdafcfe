from abc import ABC, abstractmethod
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class WorkerService(ABC):
    """
    Runs independent chunks of a computation, possibly in parallel.

    Implementations must return results in the order the chunks were given,
    whatever the number of workers.
    """

    @property
    @abstractmethod
    def max_workers(self) -> int:
        pass

    @abstractmethod
    def map(self, fn: Callable[[T], R], chunks: Iterable[T]) -> List[R]:
        pass
