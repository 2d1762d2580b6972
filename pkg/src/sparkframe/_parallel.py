"""Deterministic, block-parallel enumeration of k-subsets in lexicographic order.

The rank space [0, C(n, k)) is cut into fixed-size blocks whose size does
not depend on the worker count; each block is scanned by a pure function and
the per-block results are merged in block order.  Output is therefore the
same for any number of workers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator

_PAYLOAD: Any = None


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int, what: str = "minors"):
        super().__init__(f"{required} {what} required, budget is {budget}")
        self.required = required
        self.budget = budget


def resolve_workers(threads: int | None) -> int:
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError("thread count must be positive")
    return threads


def unrank_combination(rank: int, n: int, k: int) -> tuple[int, ...]:
    """The rank-th k-subset of range(n) in lexicographic order."""
    total = math.comb(n, k)
    if not 0 <= rank < total:
        raise IndexError("combination rank out of range")
    out, x = [], 0
    for i in range(k):
        while True:
            c = math.comb(n - x - 1, k - i - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def rank_combination(comb, n: int) -> int:
    k = len(comb)
    rank, prev = 0, -1
    for i, c in enumerate(comb):
        for x in range(prev + 1, c):
            rank += math.comb(n - x - 1, k - i - 1)
        prev = c
    return rank


def combinations_from(start: int, count: int, n: int, k: int) -> Iterator[tuple[int, ...]]:
    """``count`` consecutive k-subsets beginning at lexicographic rank ``start``."""
    if count <= 0 or k == 0:
        if count > 0 and k == 0:
            yield ()
        return
    c = list(unrank_combination(start, n, k))
    for _ in range(count):
        yield tuple(c)
        i = k - 1
        while i >= 0 and c[i] == n - k + i:
            i -= 1
        if i < 0:
            return
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1


def _init(payload):
    global _PAYLOAD
    _PAYLOAD = payload


def _call(fn, start, count):
    return fn(_PAYLOAD, start, count)


def scan_blocks(
    fn: Callable[[Any, int, int], Any],
    payload: Any,
    total: int,
    block: int,
    workers: int,
    stop: Callable[[Any], bool] | None = None,
) -> list:
    """Run ``fn(payload, start, count)`` over consecutive blocks of [0, total).

    Returns block results in block order.  When ``stop`` is given, blocks
    after the first block whose result satisfies it are discarded (they may
    or may not have been computed), so the returned prefix is deterministic.
    """
    starts = list(range(0, total, block))
    if workers <= 1 or len(starts) <= 1:
        results = []
        for s in starts:
            r = fn(payload, s, min(block, total - s))
            results.append(r)
            if stop is not None and stop(r):
                break
        return results
    results = []
    with ProcessPoolExecutor(
        max_workers=min(workers, len(starts)), initializer=_init, initargs=(payload,)
    ) as pool:
        futures = [pool.submit(_call, fn, s, min(block, total - s)) for s in starts]
        for i, fut in enumerate(futures):
            r = fut.result()
            results.append(r)
            if stop is not None and stop(r):
                for f in futures[i + 1:]:
                    f.cancel()
                break
    return results
