"""Order-preserving parallel map over processes."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "CAYLEYSYNC_THREADS"


def default_threads() -> int:
    value = os.environ.get(THREADS_ENV)
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


def pmap(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> list[R]:
    """``[fn(x) for x in items]``, spread over ``threads`` worker processes.

    Results come back in input order, so output never depends on scheduling.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))
