import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from src.app.infra.workers.interfaces.worker_service import WorkerService

T = TypeVar("T")
R = TypeVar("R")


class ThreadPoolWorkerContractV0(WorkerService):
    """
    Thread-pool implementation of WorkerService.

    numpy releases the GIL inside its kernels, which is where the chunked
    searches spend their time. A cap of 1 runs every chunk inline.
    """

    def __init__(self, threads: int = 0):
        self._max_workers = threads if threads > 0 else (os.cpu_count() or 1)

    @property
    def max_workers(self) -> int:
        return self._max_workers

    def map(self, fn: Callable[[T], R], chunks: Iterable[T]) -> List[R]:
        chunks = list(chunks)
        if self._max_workers == 1 or len(chunks) <= 1:
            return [fn(chunk) for chunk in chunks]
        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            # executor.map yields in submission order
            return list(executor.map(fn, chunks))
