"""Ordered parallel map over a thread pool.

Results always come back in input order, so output never depends on the
worker count or on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_default_workers = 1


def set_default_workers(n: int) -> None:
    global _default_workers
    if n < 1:
        raise ValueError("worker count must be positive")
    _default_workers = n


def default_workers() -> int:
    return _default_workers


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    items = list(items)
    workers = workers or _default_workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
