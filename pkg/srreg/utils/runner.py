"""Order-preserving parallel map over a process pool."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ParallelRunner:
    """Runs a picklable function over items with ``jobs`` worker processes.

    Results come back in input order, so any reduction done by the caller
    is independent of scheduling. ``jobs == 1`` runs inline, and so does a
    call made from inside an already running event loop.
    """

    def __init__(self, jobs: int = 1):
        if jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {jobs}")
        self.jobs = jobs

    async def map_async(self, fn: Callable[[T], R], items: List[T]) -> List[R]:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            futures = [loop.run_in_executor(pool, fn, item) for item in items]
            return list(await asyncio.gather(*futures))

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        if self.jobs == 1 or len(items) <= 1:
            return [fn(item) for item in items]
        try:
            asyncio.get_running_loop()
        except RuntimeError:
            logger.debug(f"Dispatching {len(items)} tasks to {self.jobs} workers")
            return asyncio.run(self.map_async(fn, items))
        logger.debug("Event loop already running, mapping inline")
        return [fn(item) for item in items]
