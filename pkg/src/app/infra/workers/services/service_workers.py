from functools import lru_cache

from src.app.infra.dotenv.services.service_dotenv import get_service_dotenv
from src.app.infra.workers.contracts.thread_pool_worker_contract_v0 import (
    ThreadPoolWorkerContractV0,
)
from src.app.infra.workers.interfaces.worker_service import WorkerService


@lru_cache(maxsize=1)
def get_service_workers() -> WorkerService:
    return ThreadPoolWorkerContractV0(get_service_dotenv().GPCODE_THREADS)
