import os
from concurrent.futures import ThreadPoolExecutor

ENV_THREADS = "POLYRING_LAB_THREADS"


def worker_count(default=None):
    raw = os.environ.get(ENV_THREADS)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return default or min(8, os.cpu_count() or 1)


def ordered_map(fn, items, workers=None):
    """``list(map(fn, items))`` spread over threads; order is preserved."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
