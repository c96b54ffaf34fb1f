"""Deterministic parallel-map helper.

Work is mapped in submission order and collected in that same order, so
results are identical for any worker count; the compiled kernels release
no shared state and the fallback kernels are pure, making thread pools
safe either way.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor


def ordered_map(fn, items, threads=None):
    items = list(items)
    if not items or not threads or threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=int(threads)) as pool:
        return list(pool.map(fn, items))
