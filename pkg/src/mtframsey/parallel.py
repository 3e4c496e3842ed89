"""Splitting mtf generation across processes.

The canonical construction path decides acceptance of a child from the
child and its parent alone, so the generation tree can be cut at any order
and the subtrees below the cut run independently.  Output order then
depends on scheduling; the set of graphs does not.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import graph6
from .graph import Graph
from .mtfgen import GenerationStats, MtfGenerator

WORKERS_ENV = "MTFRAMSEY_WORKERS"
MAX_SPLIT_ORDER = 12


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _subtree(args: tuple[int, list[str], bool]) -> tuple[GenerationStats, list[str]]:
    target_n, seeds, collect = args
    out: list[str] = []
    visitor = (lambda g, kind: out.append(graph6.encode(g))) if collect else None
    gen = MtfGenerator(target_n, visitor)
    stats = gen.run((graph6.decode(s), None) for s in seeds)
    return stats, out


def generate_mtf_parallel(
    target_n: int,
    workers: int,
    collect: bool = True,
    split_order: Optional[int] = None,
) -> tuple[GenerationStats, list[str]]:
    """Stats for all orders up to ``target_n`` and (if ``collect``) graph6 lines at ``target_n``."""
    if workers <= 1 or target_n <= 3:
        out: list[str] = []
        visitor = (lambda g, kind: out.append(graph6.encode(g))) if collect else None
        return MtfGenerator(target_n, visitor).run(), out
    t0 = time.perf_counter()
    split = split_order if split_order is not None else min(target_n - 1, MAX_SPLIT_ORDER)
    if not 1 <= split < target_n:
        raise ValueError("split order must lie below the target order")
    seeds: list[str] = []

    def keep(g: Graph, kind: int) -> None:
        if g.n == split:
            seeds.append(graph6.encode(g))

    stats = MtfGenerator(split, keep, visit_all_orders=True).run()
    chunks = [seeds[i::workers] for i in range(workers)]
    lines: list[str] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for st, part in pool.map(_subtree, [(target_n, c, collect) for c in chunks if c]):
            stats.merge(st)
            lines.extend(part)
    stats.seconds = time.perf_counter() - t0
    return stats, lines
