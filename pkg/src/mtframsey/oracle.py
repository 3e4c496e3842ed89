"""Slow, independent baselines for checking the generators on small inputs.

Nothing here touches ``mtfgen`` or ``ramseyprune``.  Graphs are grown one
vertex at a time, joining the new vertex to every admissible subset of the
old vertices and deduplicating by canonical form; any hereditary property
(triangle-free, Ramsey for a fixed target) can be enumerated this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .canon import canonical_form
from .graph import (
    Graph,
    bits,
    complement,
    contains_subgraph,
    is_mtf,
    is_triangle_free,
)

MTF_BUDGET = 10
RAMSEY_BUDGET = 14


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleReport:
    instance: str
    oracle_answer: object
    engine_answer: object

    @property
    def match(self) -> bool:
        return self.oracle_answer == self.engine_answer

    def tsv(self) -> str:
        return f"{self.instance}\t{self.oracle_answer}\t{self.engine_answer}\t{'ok' if self.match else 'MISMATCH'}"


def _independent_subsets(g: Graph) -> Iterable[int]:
    """All independent vertex sets of ``g`` (including the empty set)."""
    out = [0]
    for v in range(g.n):
        out += [s | (1 << v) for s in out if not g.adj[v] & s]
    return out


def _grow(g: Graph, nbrs: int) -> Graph:
    n = g.n
    adj = list(g.adj)
    for v in bits(nbrs):
        adj[v] |= 1 << n
    adj.append(nbrs)
    return Graph(n + 1, tuple(adj))


def triangle_free_levels(
    n_max: int, keep: Optional[Callable[[Graph], bool]] = None
) -> Iterable[tuple[int, list[Graph]]]:
    """Yield ``(n, graphs)``: all triangle-free graphs passing ``keep``, up to isomorphism.

    ``keep`` must be hereditary (closed under vertex deletion), otherwise
    classes are missed.
    """
    level = [Graph.empty(1)]
    if keep is not None:
        level = [g for g in level if keep(g)]
    yield 1, level
    for n in range(2, n_max + 1):
        seen: dict[tuple[int, ...], Graph] = {}
        for g in level:
            for s in _independent_subsets(g):
                child = _grow(g, s)
                if keep is not None and not keep(child):
                    continue
                key = canonical_form(child).key
                if key not in seen:
                    seen[key] = child
        level = list(seen.values())
        yield n, level
        if not level:
            return


def brute_mtf(n: int) -> set[tuple[int, ...]]:
    """Canonical keys of all mtf graphs on ``n`` vertices."""
    if not 1 <= n <= MTF_BUDGET:
        raise BudgetExceeded(f"brute_mtf is limited to 1..{MTF_BUDGET} vertices")
    if n == 1:
        return {canonical_form(Graph.empty(1)).key}
    out: set[tuple[int, ...]] = set()
    for order, level in triangle_free_levels(n - 1):
        if order != n - 1:
            continue
        # every mtf graph on n vertices is a triangle-free graph on n-1 plus one vertex
        for g in level:
            for s in _independent_subsets(g):
                child = _grow(g, s)
                if is_mtf(child):
                    out.add(canonical_form(child).key)
    return out


def verify_ramsey_graph(f: Graph, g: Graph) -> bool:
    """Is ``f`` a triangle Ramsey graph for ``g``?  Uses only the graph primitives."""
    return is_triangle_free(f) and not contains_subgraph(complement(f), g)


def ramsey_graph_levels(g: Graph, r_max: int) -> Iterable[tuple[int, list[Graph]]]:
    """All triangle Ramsey graphs for ``g`` order by order (hereditary growth)."""
    return triangle_free_levels(r_max, keep=lambda f: not contains_subgraph(complement(f), g))


def brute_ramsey_number(g: Graph, r_max: int = RAMSEY_BUDGET) -> int:
    """Smallest r with no triangle Ramsey graph for ``g`` on r vertices."""
    if r_max > RAMSEY_BUDGET or g.n > 6:
        raise BudgetExceeded(f"brute_ramsey_number is limited to r <= {RAMSEY_BUDGET}, |V(g)| <= 6")
    if g.n <= 1:
        return 1
    last = 1
    for n, level in ramsey_graph_levels(g, r_max):
        if not level:
            return n
        last = n
    raise BudgetExceeded(f"Ramsey graphs for this target still exist at order {last}")


def brute_good_sets(g: Graph) -> list[tuple[int, int]]:
    """Every good dominating set of an mtf graph as ``(mask, kind)``, by full subset scan."""
    if g.n > 12:
        raise BudgetExceeded("brute_good_sets is limited to 12 vertices")
    n = g.n
    full = (1 << n) - 1
    nbhds = set(g.adj)
    out = []
    for s in range(1, full + 1):
        dom = s
        for v in bits(s):
            dom |= g.adj[v]
        if dom != full:
            continue
        # distances after deleting the edges inside s
        adj = [row & ~s if s >> v & 1 else row for v, row in enumerate(g.adj)]
        good = True
        for a in bits(s):
            reach = adj[a] | (1 << a)
            for w in bits(adj[a]):
                reach |= adj[w]
            if full & ~s & ~reach:
                good = False
                break
        if not good:
            continue
        has_edges = any(g.adj[v] & s for v in bits(s))
        kind = 2 if has_edges else (0 if s in nbhds else 1)
        out.append((s, kind))
    return out
