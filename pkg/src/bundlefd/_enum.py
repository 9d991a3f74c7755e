"""Deterministic combinatorial enumeration: colex subset streams, the
evaluation budget guard, and a chunked max-reduction that gives identical
results whether it runs serially or on a process pool."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from itertools import islice

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """Raised before starting an enumeration that would exceed the budget."""


def subset_count(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def check_budget(evaluations: int, budget: int) -> None:
    if evaluations > budget:
        raise BudgetExceededError(
            f"enumeration needs {evaluations} subgraph evaluations, "
            f"budget is {budget}"
        )


def colex_subsets(pool, k: int):
    """Yield k-subsets of `pool` (a sequence) in colexicographic order.

    Colex on index sets: a subset precedes another iff its largest
    differing element is smaller. For k=1 this is ascending order.
    """
    items = tuple(pool)
    if k == 0:
        yield ()
        return
    if k > len(items):
        return

    def rec(limit: int, size: int):
        if size == 0:
            yield ()
            return
        for i in range(size - 1, limit):
            for prefix in rec(i, size - 1):
                yield prefix + (items[i],)

    yield from rec(len(items), k)


def colex_pairs(vpool, epool, p: int, q: int):
    """Yield (vertex-subset, edge-subset) pairs: vertex subsets in colex
    outer order, edge subsets colex inner."""
    edge_subsets = list(colex_subsets(epool, q)) if q else [()]
    for x in colex_subsets(vpool, p):
        for y in edge_subsets:
            yield x, y


def _eval_chunk(args):
    evaluate, payload, chunk, stop_at = args
    best = None
    best_item = None
    for item in chunk:
        value = evaluate(payload, item)
        if best is None or value > best:
            best = value
            best_item = item
            if stop_at is not None and value >= stop_at:
                break
    return best, best_item


def max_reduce(evaluate, payload, items, *, workers: int = 1,
               chunk_size: int = 2048, stop_at=None):
    """(max value, first item attaining it) over the `items` stream.

    `evaluate` must be a module-level callable (picklable) taking
    (payload, item). When `stop_at` is given, scanning stops at the first
    item reaching it; since nothing can exceed `stop_at`, that item is
    still the first maximiser. Chunks merge in stream order with a strict
    ">", so the witness matches the serial scan for any worker count.
    """
    if workers <= 1:
        return _eval_chunk((evaluate, payload, items, stop_at))

    it = iter(items)
    best = None
    best_item = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = iter(lambda: list(islice(it, chunk_size)), [])
        for value, item in pool.map(
            _eval_chunk,
            ((evaluate, payload, chunk, stop_at) for chunk in chunks),
        ):
            if value is not None and (best is None or value > best):
                best = value
                best_item = item
    return best, best_item
