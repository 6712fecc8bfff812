"""
Bounded worker pool for batch classification.

Environment:
    COXINV_THREADS: maximum concurrent workers (default: logical CPU count)
"""
import os
import logging
from functools import partial
from typing import Any, Callable, List, Optional, Sequence, TypeVar

import anyio
import psutil

from lib.data_types import InvalidParameter

THREADS = int(os.environ.get("COXINV_THREADS", str(psutil.cpu_count() or 1)))

log = logging.getLogger(__file__)

T = TypeVar("T")
R = TypeVar("R")


def run_batch(fn: Callable[[T], R], items: Sequence[T], threads: Optional[int] = None) -> List[R]:
    """
    Apply `fn` to every item on worker threads and return results in input order.

    The first exception by input position is re-raised after every worker has
    finished, so a failing batch reports the same error on every run.
    """
    threads = THREADS if threads is None else threads
    if threads < 1:
        raise InvalidParameter({"parameter": "threads", "value": threads, "minimum": 1})
    if not items:
        return []
    return anyio.run(partial(_run_batch, fn, list(items), threads))


async def _run_batch(fn: Callable[[T], R], items: List[T], threads: int) -> List[R]:
    limiter = anyio.CapacityLimiter(threads)
    results: List[Any] = [None] * len(items)
    errors: List[Optional[BaseException]] = [None] * len(items)

    async def work(index: int, item: T) -> None:
        try:
            results[index] = await anyio.to_thread.run_sync(fn, item, limiter=limiter)
        except Exception as e:
            errors[index] = e

    async with anyio.create_task_group() as tg:
        for index, item in enumerate(items):
            tg.start_soon(work, index, item)

    for error in errors:
        if error is not None:
            raise error
    log.debug(f"batch of {len(items)} finished on {threads} workers")
    return results
