"""Computing triangle Ramsey numbers R(K3, G) with the pruned generator.

R(K3, G) <= r is proven by exhausting the Ramsey-restricted mtf generation
at order r; R(K3, G) > r by exhibiting one mtf Ramsey graph on r vertices.
For whole lists of candidates the work is shared: a graph contained in one
already proven to be <= r is itself <= r, and a Ramsey graph found for one
candidate often settles others.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import graph6
from .canon import canonical_form
from .graph import Graph, bits, complement, contains_subgraph, induced_subgraph, is_triangle_free
from .mtfgen import MtfGenerator, StopGeneration
from .ramseyprune import RamseyContext, RamseyFilter

log = logging.getLogger(__name__)

DEFAULT_R_MAX = 40


def verify_ramsey_graph(f: Graph, g: Graph) -> bool:
    """Independent check: ``f`` triangle-free and ``g`` not a subgraph of its complement."""
    return is_triangle_free(f) and not contains_subgraph(complement(f), g)


def _context(g: Graph, ctx: Optional[RamseyContext], **kw) -> RamseyContext:
    if ctx is not None:
        if ctx.target != g:
            raise ValueError("context was built for a different target graph")
        return ctx
    return RamseyContext(g, **kw)


def find_ramsey_graph(g: Graph, r: int, ctx: Optional[RamseyContext] = None, **kw) -> Optional[Graph]:
    """Some mtf Ramsey graph for ``g`` on ``r`` vertices, or None if there is none."""
    ctx = _context(g, ctx, **kw)
    if r == 1:
        # generation starts from K1 unfiltered
        return Graph.empty(1) if g.n > 1 else None
    found: list[Graph] = []

    def visit(f: Graph, kind: int) -> None:
        found.append(f)
        raise StopGeneration

    MtfGenerator(r, visit, RamseyFilter(ctx)).run()
    return found[0] if found else None


@dataclass
class RamseyNumber:
    value: int
    exact: bool
    # an mtf Ramsey graph on value-1 vertices (the lower-bound certificate)
    witness: Optional[Graph] = None
    counts: dict[int, int] = field(default_factory=dict)

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def ramsey_number(
    g: Graph,
    r_start: Optional[int] = None,
    r_max: int = DEFAULT_R_MAX,
    ctx: Optional[RamseyContext] = None,
    **kw,
) -> RamseyNumber:
    """R(K3, g) by one exhaustive run of the Ramsey-restricted generator.

    Returns a lower bound (``exact=False``) when Ramsey graphs still exist at
    ``r_max`` vertices.  ``r_start`` is a claimed lower bound and is checked.
    """
    if g.n <= 1:
        return RamseyNumber(1, True)
    ctx = _context(g, ctx, **kw)
    last: dict[int, Graph] = {}
    counts: dict[int, int] = {}

    def visit(f: Graph, kind: int) -> None:
        last[f.n] = f
        counts[f.n] = counts.get(f.n, 0) + 1

    gen = MtfGenerator(r_max, visit, RamseyFilter(ctx), visit_all_orders=True)
    gen.run()
    top = max(last)
    if top >= r_max:
        return RamseyNumber(r_max + 1, False, last[top], counts)
    result = RamseyNumber(top + 1, True, last[top], counts)
    if r_start is not None and result.value < r_start:
        raise ValueError(f"claimed lower bound {r_start} exceeds computed value {result.value}")
    return result


def all_ramsey_graphs(
    g: Graph,
    r: int,
    seed_graphs: Optional[Sequence[Graph]] = None,
    ctx: Optional[RamseyContext] = None,
    **kw,
) -> list[Graph]:
    """Every mtf Ramsey graph for ``g`` on ``r`` vertices, up to isomorphism.

    ``seed_graphs`` must be all mtf Ramsey graphs for ``g`` at one smaller
    order; generation then resumes from them instead of from K1.
    """
    ctx = _context(g, ctx, **kw)
    out: list[Graph] = []
    gen = MtfGenerator(r, lambda f, kind: out.append(f), RamseyFilter(ctx))
    if seed_graphs is None:
        if r == 1:
            return [Graph.empty(1)] if g.n > 1 else []
        gen.run()
        return out
    seeds = list(seed_graphs)
    if not seeds:
        return []
    orders = {s.n for s in seeds}
    if len(orders) != 1 or orders.pop() >= r:
        raise ValueError("seed graphs must share one order below r")
    flt = gen.filter
    pairs = []
    for s in seeds:
        node = flt.root_node(s)
        if node is None:
            raise ValueError("a seed graph is not a Ramsey graph for the target")
        pairs.append((s, node))
    gen.run(pairs)
    return out


def expand_to_all_ramsey_graphs_general(mtf_list: Iterable[Graph], g: Graph) -> list[Graph]:
    """All triangle-free Ramsey graphs obtained by deleting edges, up to isomorphism."""
    seen: dict[tuple[int, ...], Graph] = {}
    frontier: list[Graph] = []
    for f in mtf_list:
        key = canonical_form(f).key
        if key not in seen:
            seen[key] = f
            frontier.append(f)
    while frontier:
        nxt: list[Graph] = []
        for f in frontier:
            for a, b in f.edges():
                adj = list(f.adj)
                adj[a] &= ~(1 << b)
                adj[b] &= ~(1 << a)
                h = Graph(f.n, tuple(adj))
                if contains_subgraph(complement(h), g):
                    continue
                key = canonical_form(h).key
                if key not in seen:
                    seen[key] = h
                    nxt.append(h)
        frontier = nxt
    return sorted(seen.values(), key=lambda h: (h.num_edges(), graph6.encode(h)))


# ---------------------------------------------------------------------------
# Classifying lists of candidates.


@dataclass
class ClassificationState:
    r: int
    maxgraphs: list[Graph] = field(default_factory=list)
    ramseygraphs: list[Graph] = field(default_factory=list)
    verdicts: dict[str, str] = field(default_factory=dict)
    # candidate graph6 -> Ramsey graph on r vertices showing R > r
    witnesses: dict[str, Graph] = field(default_factory=dict)
    generation_runs: int = 0


def _ordered(candidates: Sequence[Graph]) -> list[int]:
    return sorted(range(len(candidates)), key=lambda i: (-candidates[i].num_edges(), graph6.encode(candidates[i])))


def classify_at_order(
    candidates: Sequence[Graph],
    r: int,
    state: Optional[ClassificationState] = None,
    checkpoint_dir: Optional[os.PathLike] = None,
    **ctx_kw,
) -> list[bool]:
    """For candidates known to have R(K3, G) >= r, decide R <= r (True) or R > r (False)."""
    if state is None:
        state = ClassificationState(r)
    ckpt = _Checkpoint(checkpoint_dir, r) if checkpoint_dir is not None else None
    if ckpt is not None:
        ckpt.load(state)
    verdict: list[Optional[bool]] = [None] * len(candidates)
    for i in _ordered(candidates):
        g = candidates[i]
        key = graph6.encode(g)
        if key in state.verdicts:
            verdict[i] = state.verdicts[key] == f"<={r}"
            if not verdict[i] and key not in state.witnesses:
                f = next((f for f in state.ramseygraphs if verify_ramsey_graph(f, g)), None)
                if f is not None:
                    state.witnesses[key] = f
            continue
        if any(h.n == g.n and contains_subgraph(h, g) for h in state.maxgraphs):
            verdict[i] = True
        else:
            f = next((f for f in state.ramseygraphs if not contains_subgraph(complement(f), g)), None)
            if f is None:
                state.generation_runs += 1
                f = find_ramsey_graph(g, r, **ctx_kw)
                if f is not None:
                    if not verify_ramsey_graph(f, g):
                        raise AssertionError("generated graph failed independent Ramsey verification")
                    state.ramseygraphs.append(f)
            if f is not None:
                state.witnesses[key] = f
                verdict[i] = False
            else:
                state.maxgraphs.append(g)
                verdict[i] = True
        state.verdicts[key] = f"<={r}" if verdict[i] else f">{r}"
        if ckpt is not None:
            ckpt.save(state)
    return [bool(v) for v in verdict]


@dataclass
class Classified:
    graph: Graph
    value: Optional[int]
    # mtf Ramsey graph on value-1 vertices, None when value <= |V(G)|
    witness: Optional[Graph] = None


def classify_all(
    candidates: Sequence[Graph],
    r_start: Optional[int] = None,
    r_max: int = DEFAULT_R_MAX,
    checkpoint_dir: Optional[os.PathLike] = None,
    **ctx_kw,
) -> list[Optional[int]]:
    """Exact R(K3, G) for every candidate (None past ``r_max``), raising r one step at a time."""
    return [c.value for c in classify_with_witnesses(candidates, r_start, r_max, checkpoint_dir, **ctx_kw)]


def classify_with_witnesses(
    candidates: Sequence[Graph],
    r_start: Optional[int] = None,
    r_max: int = DEFAULT_R_MAX,
    checkpoint_dir: Optional[os.PathLike] = None,
    **ctx_kw,
) -> list[Classified]:
    out = [Classified(g, None) for g in candidates]
    if not candidates:
        return out
    # R(K3, G) >= |V(G)|: the edgeless graph on |V(G)|-1 vertices is a Ramsey graph
    r = r_start if r_start is not None else min(g.n for g in candidates)
    remaining = list(range(len(candidates)))
    while remaining and r <= r_max:
        todo = [i for i in remaining if candidates[i].n <= r]
        state = ClassificationState(r)
        below = classify_at_order([candidates[i] for i in todo], r, state, checkpoint_dir, **ctx_kw)
        settled = set()
        for i, le in zip(todo, below):
            if le:
                out[i].value = r
                settled.add(i)
            else:
                out[i].witness = state.witnesses.get(graph6.encode(candidates[i]))
        remaining = [i for i in remaining if i not in settled]
        log.info("order %d: %d settled, %d remain", r, len(settled), len(remaining))
        r += 1
    return out


def candidate_graphs(order: int, connected: Optional[bool] = None) -> list[Graph]:
    """All graphs on ``order`` vertices up to isomorphism, optionally only (dis)connected ones."""
    if order < 1:
        raise ValueError("order must be positive")
    level: dict[tuple[int, ...], Graph] = {canonical_form(Graph.empty(1)).key: Graph.empty(1)}
    for n in range(1, order):
        nxt: dict[tuple[int, ...], Graph] = {}
        for g in level.values():
            for nb in range(1 << n):
                adj = list(g.adj)
                for v in range(n):
                    if nb >> v & 1:
                        adj[v] |= 1 << n
                adj.append(nb)
                h = Graph(n + 1, tuple(adj))
                nxt.setdefault(canonical_form(h).key, h)
        level = nxt
    out = sorted(level.values(), key=lambda h: (h.num_edges(), graph6.encode(h)))
    if connected is None:
        return out
    return [h for h in out if is_connected(h) == connected]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def components(g: Graph) -> list[Graph]:
    """Connected components as separate graphs."""
    left = g.full_mask
    out = []
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        out.append(induced_subgraph(g, seen))
        left &= ~seen
    return out


class _Checkpoint:
    """Layout: <dir>/r<r>/{maxgraphs.g6, ramseygraphs.g6, verdicts.tsv}."""

    def __init__(self, root: os.PathLike, r: int) -> None:
        self.dir = Path(root) / f"r{r}"

    def load(self, state: ClassificationState) -> None:
        if not self.dir.exists():
            return
        for name, target in (("maxgraphs.g6", state.maxgraphs), ("ramseygraphs.g6", state.ramseygraphs)):
            path = self.dir / name
            if path.exists():
                with path.open() as fh:
                    target.extend(graph6.read_file(fh))
        path = self.dir / "verdicts.tsv"
        if path.exists():
            for line in path.read_text().splitlines():
                if line and not line.startswith("#"):
                    g6, v = line.split("\t")[:2]
                    state.verdicts[g6] = v

    def save(self, state: ClassificationState) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)
        for name, graphs in (("maxgraphs.g6", state.maxgraphs), ("ramseygraphs.g6", state.ramseygraphs)):
            tmp = self.dir / (name + ".tmp")
            with tmp.open("w") as fh:
                graph6.write_lines(graphs, fh)
            tmp.replace(self.dir / name)
        tmp = self.dir / "verdicts.tsv.tmp"
        tmp.write_text("".join(f"{k}\t{v}\n" for k, v in state.verdicts.items()))
        tmp.replace(self.dir / "verdicts.tsv")
