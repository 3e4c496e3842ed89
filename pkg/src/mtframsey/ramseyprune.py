"""Restricting mtf generation to triangle Ramsey graphs for a target G.

A triangle-free M fails to be a Ramsey graph for G exactly when G embeds
in the complement of M, i.e. when some |V(G)|-subset of M induces a graph
that maps bijectively into the complement of G.  That second form is what
is searched here: for dense G the complement has few edges, so candidate
sets can be cut as soon as they induce too many edges.

Tests run in order: cached witness sets from earlier rejections at the same
order, greedy sparse sets, then the complete search.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import graph6
from .graph import Graph, VertexSet, bits, complement, contains_subgraph, induced_rows
from .mtfgen import ProvenanceTag, expand_rows, trusted_graph

log = logging.getLogger(__name__)

DEFAULT_CACHE_CAP = 100
DEFAULT_APPROX_CAP = 256

# process-wide tallies of debug-mode checks, across all contexts
DEBUG_TOTALS: Counter[str] = Counter()


class _PatternMatcher:
    """Answers "does this small labelled graph map bijectively into the pattern?" with memoisation."""

    def __init__(self, pattern: Graph) -> None:
        self.pattern = pattern
        self.k = pattern.n
        self.edges = pattern.num_edges()
        self.max_deg = max(pattern.degrees(), default=0)
        self.deg_desc = sorted(pattern.degrees(), reverse=True)
        self.memo: dict[tuple[int, ...], bool] = {}

    def fits(self, rows: tuple[int, ...]) -> bool:
        hit = self.memo.get(rows)
        if hit is not None:
            return hit
        ans = self._fits(rows)
        if len(self.memo) > 200_000:
            self.memo.clear()
        self.memo[rows] = ans
        return ans

    def _fits(self, rows: tuple[int, ...]) -> bool:
        degs = sorted((r.bit_count() for r in rows), reverse=True)
        if sum(degs) // 2 > self.edges:
            return False
        if any(a > b for a, b in zip(degs, self.deg_desc)):
            return False
        if not self.edges or sum(degs) == 0:
            return True
        return contains_subgraph(self.pattern, trusted_graph(len(rows), rows))


@dataclass
class RamseyNode:
    """Per-graph state carried down the generation tree."""

    approx: list[VertexSet] = field(default_factory=list)


@dataclass
class SearchOutcome:
    witness: Optional[VertexSet]
    approx: list[VertexSet]


class RamseyContext:
    """Target graph data plus the per-order witness caches."""

    def __init__(
        self,
        target: Graph,
        cache_cap: int = DEFAULT_CACHE_CAP,
        use_greedy: bool = True,
        use_provenance: bool = True,
        use_approx: bool = True,
        approx_cap: int = DEFAULT_APPROX_CAP,
        debug: bool = False,
    ) -> None:
        if target.n < 1:
            raise ValueError("target graph needs at least one vertex")
        self.target = target
        self.k = target.n
        self.target_comp = complement(target)
        comp_deg = self.target_comp.degrees()
        drop = min(range(self.k), key=lambda v: (comp_deg[v], v))
        keep = [v for v in range(self.k) if v != drop]
        self.target_comp_reduced = trusted_graph(self.k - 1, induced_rows(self.target_comp.adj, keep))
        self.matcher = _PatternMatcher(self.target_comp)
        self.approx_matcher = _PatternMatcher(self.target_comp_reduced)
        self.comp_edges = self.matcher.edges
        self.comp_max_deg = self.matcher.max_deg
        self.cache_cap = cache_cap
        self.cache: dict[int, deque[VertexSet]] = {}
        self.use_greedy = use_greedy
        self.use_provenance = use_provenance
        self.use_approx = use_approx
        self.approx_cap = approx_cap
        self.debug = debug
        self.log_witnesses = False
        self.stats = {"cache_hits": 0, "greedy_hits": 0, "complete_hits": 0, "ramsey": 0, "pruned_children": 0, "prune_checks": 0}

    # -- witness checks --------------------------------------------------

    def is_witness(self, adj: Sequence[int], s: VertexSet) -> bool:
        """Does ``s`` induce a spanning subgraph of the target's complement?"""
        return s.bit_count() == self.k and self.matcher.fits(induced_rows(adj, list(bits(s))))

    def is_approximating(self, adj: Sequence[int], s: VertexSet) -> bool:
        return s.bit_count() == self.k - 1 and self.approx_matcher.fits(induced_rows(adj, list(bits(s))))

    def _remember(self, n: int, s: VertexSet) -> None:
        if self.cache_cap <= 0:
            return
        q = self.cache.get(n)
        if q is None:
            q = self.cache[n] = deque(maxlen=self.cache_cap)
        if s not in q:
            q.append(s)


def greedy_candidates(adj: Sequence[int], n: int, k: int) -> list[VertexSet]:
    """One sparse k-set per seed vertex, grown by least new adjacency (ties: lowest index)."""
    if k > n:
        return []
    out = []
    for seed in range(n):
        s = 1 << seed
        for _ in range(k - 1):
            best = -1
            best_cost = n + 1
            for v in range(n):
                if s >> v & 1:
                    continue
                cost = (adj[v] & s).bit_count()
                if cost < best_cost:
                    best, best_cost = v, cost
                    if cost == 0:
                        break
            s |= 1 << best
        out.append(s)
    return out


def complete_search(
    adj: Sequence[int],
    n: int,
    ctx: RamseyContext,
    required: VertexSet = 0,
    collect_approx: bool = False,
) -> SearchOutcome:
    """Search all k-sets containing ``required`` for a witness.

    Partial sets are cut when their induced edge count or any induced degree
    exceeds what the target's complement allows.  With ``collect_approx``
    every (k-1)-set met on the way is tested as an approximating set.
    """
    k = ctx.k
    max_e = ctx.comp_edges
    max_d = ctx.comp_max_deg
    approx: list[VertexSet] = []
    if required.bit_count() > k or k > n:
        return SearchOutcome(None, approx)
    # seed the set with the required vertices
    s0 = 0
    e0 = 0
    for v in bits(required):
        e0 += (adj[v] & s0).bit_count()
        s0 |= 1 << v
    if e0 > max_e or any((adj[v] & s0).bit_count() > max_d for v in bits(s0)):
        return SearchOutcome(None, approx)
    full = (1 << n) - 1
    want_approx = collect_approx and ctx.approx_cap > 0
    found: list[VertexSet] = []

    def rec(s: int, size: int, edges: int, cand: int) -> bool:
        if size == k - 1 and want_approx and len(approx) < ctx.approx_cap and ctx.is_approximating(adj, s):
            approx.append(s)
        if size == k:
            if ctx.is_witness(adj, s):
                found.append(s)
                return True
            return False
        if size + cand.bit_count() < k:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if size + 1 + cand.bit_count() < k:
                return False
            nb = adj[v] & s
            ev = nb.bit_count()
            if edges + ev > max_e or ev > max_d:
                continue
            if ev and any((adj[u] & s).bit_count() >= max_d for u in bits(nb)):
                continue
            if rec(s | low, size + 1, edges + ev, cand):
                return True
        return False

    rec(s0, s0.bit_count(), e0, full & ~s0)
    return SearchOutcome(found[0] if found else None, approx)


def _restrictions(adj: Sequence[int], prov: Optional[ProvenanceTag], use: bool) -> list[VertexSet]:
    """Alternative required vertex sets; any witness must contain one of them."""
    if prov is None or not use:
        return [0]
    w = prov.new_vertex
    if prov.kind == 0:
        twins = 0
        for v, row in enumerate(adj):
            if row == adj[w]:
                twins |= 1 << v
        return [twins]
    if prov.kind == 1:
        return [1 << w]
    if len(prov.removed_edges) == 1:
        a, b = prov.removed_edges[0]
        return [1 << w, (1 << a) | (1 << b)]
    return [0]


def run_ramsey_test(
    adj: Sequence[int],
    n: int,
    ctx: RamseyContext,
    prov: Optional[ProvenanceTag] = None,
    collect_approx: bool = False,
) -> SearchOutcome:
    """Cache, greedy, then complete search; witness None means Ramsey graph."""
    k = ctx.k
    if n < k:
        approx: list[VertexSet] = []
        if collect_approx and n == k - 1 and ctx.is_approximating(adj, (1 << n) - 1):
            approx.append((1 << n) - 1)
        return SearchOutcome(None, approx)
    q = ctx.cache.get(n)
    if q:
        for s in q:
            if ctx.is_witness(adj, s):
                ctx.stats["cache_hits"] += 1
                return SearchOutcome(s, [])
    if ctx.use_greedy:
        for s in greedy_candidates(adj, n, k):
            if ctx.is_witness(adj, s):
                ctx.stats["greedy_hits"] += 1
                ctx._remember(n, s)
                return SearchOutcome(s, [])
    approx_all: list[VertexSet] = []
    for req in _restrictions(adj, prov, ctx.use_provenance):
        out = complete_search(adj, n, ctx, req, collect_approx)
        approx_all += out.approx
        if out.witness is not None:
            ctx.stats["complete_hits"] += 1
            ctx._remember(n, out.witness)
            return SearchOutcome(out.witness, [])
    ctx.stats["ramsey"] += 1
    return SearchOutcome(None, approx_all)


def is_ramsey_graph(
    m: Graph, ctx: RamseyContext, prov: Optional[ProvenanceTag] = None
) -> tuple[bool, Optional[VertexSet]]:
    """``(True, None)`` for a Ramsey graph, else ``(False, witness)``.

    With ``prov`` the complete search assumes ``m``'s parent was already a
    Ramsey graph and only inspects sets that could have become witnesses.
    """
    out = run_ramsey_test(m.adj, m.n, ctx, prov)
    if out.witness is not None and ctx.log_witnesses:
        log.info("witness %s %s", graph6.encode(m), list(bits(out.witness)))
    return out.witness is None, out.witness


def find_approximating_sets(m: Graph, ctx: RamseyContext) -> list[VertexSet]:
    """Approximating sets met by an unrestricted complete search of a Ramsey graph."""
    return complete_search(m.adj, m.n, ctx, 0, collect_approx=True).approx


def child_set_admissible(s: VertexSet, approx_sets: Sequence[VertexSet]) -> bool:
    """False when the expansion set misses some approximating set entirely."""
    for a in approx_sets:
        if not s & a:
            return False
    return True


class RamseyFilter:
    """Generation hooks that keep only Ramsey graphs for ``ctx.target``."""

    def __init__(self, ctx: RamseyContext) -> None:
        self.ctx = ctx

    def root_node(self, g: Graph) -> Optional[RamseyNode]:
        """State for a seed graph; None if the seed is not a Ramsey graph."""
        out = run_ramsey_test(g.adj, g.n, self.ctx, None, collect_approx=self.ctx.use_approx)
        if out.witness is not None:
            return None
        return RamseyNode(out.approx)

    def admissible(self, node: Optional[RamseyNode], adj: list[int], n: int, s: VertexSet, kind: int) -> bool:
        if node is None or not self.ctx.use_approx:
            return True
        if child_set_admissible(s, node.approx):
            return True
        self.ctx.stats["pruned_children"] += 1
        if self.ctx.debug:
            self.ctx.stats["prune_checks"] += 1
            DEBUG_TOTALS["prune_checks"] += 1
            child = trusted_graph(n + 1, expand_rows(adj, n, s))
            if not contains_subgraph(complement(child), self.ctx.target):
                raise AssertionError("approximating-set pruning discarded a Ramsey graph")
        return False

    def accept(
        self, node: Optional[RamseyNode], adj: list[int], n: int, prov: ProvenanceTag
    ) -> tuple[bool, Optional[RamseyNode]]:
        ctx = self.ctx
        out = run_ramsey_test(adj, n, ctx, prov, collect_approx=ctx.use_approx)
        if ctx.debug:
            truth = not contains_subgraph(complement(trusted_graph(n, adj)), ctx.target)
            DEBUG_TOTALS["accept_checks"] += 1
            if truth != (out.witness is None):
                raise AssertionError("Ramsey test disagrees with direct containment")
        if out.witness is not None:
            if ctx.log_witnesses:
                log.info("witness %s %s", graph6.encode(trusted_graph(n, adj)), list(bits(out.witness)))
            return False, None
        if not ctx.use_approx:
            return True, RamseyNode()
        # parent's approximating sets stay approximating: children never gain edges among old vertices
        inherited = node.approx if node is not None else []
        merged = list(dict.fromkeys(out.approx + inherited))[: ctx.approx_cap]
        return True, RamseyNode(merged)
