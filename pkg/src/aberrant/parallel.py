"""Thread-count plumbing for the embarrassingly parallel checks."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get("ABERRANT_THREADS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def map_maybe_parallel(fn, items, threads: int | None = None):
    count = worker_count(threads)
    items = list(items)
    if count <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, items))
