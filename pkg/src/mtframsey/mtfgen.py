"""Isomorph-free generation of maximal triangle-free (mtf) graphs.

Every mtf graph on n+1 vertices arises from one on n vertices by picking a
good dominating set S, deleting the edges inside S and joining a new vertex
to all of S.  Isomorph rejection follows the canonical construction path
method: children are accepted only when the new vertex is the canonical
reduction vertex, and one expansion is performed per orbit of good
dominating sets under the parent's automorphism group.

Graphs travel through the recursion as plain lists of bit rows; ``Graph``
objects are built only for the visitor.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Protocol, Sequence

from . import canon
from .graph import MAX_VERTICES, Graph, VertexSet, bits, is_mtf

Edge = tuple[int, int]


@dataclass(frozen=True)
class GoodDominatingSet:
    set: VertexSet
    kind: int
    internal_edges: tuple[Edge, ...] = ()
    witness_vertex: Optional[int] = None


@dataclass(frozen=True)
class ProvenanceTag:
    """How a child was built: expansion kind, the new vertex and removed edges."""

    kind: int
    new_vertex: int
    removed_edges: tuple[Edge, ...] = ()


@dataclass
class GenerationStats:
    counts: dict[int, list[int]] = field(default_factory=dict)
    seconds: float = 0.0

    def record(self, n: int, kind: int) -> None:
        row = self.counts.setdefault(n, [0, 0, 0, 0])
        row[0] += 1
        if kind in (0, 1, 2):
            row[1 + kind] += 1

    def merge(self, other: GenerationStats) -> None:
        for n, row in other.counts.items():
            mine = self.counts.setdefault(n, [0, 0, 0, 0])
            for i, x in enumerate(row):
                mine[i] += x
        self.seconds += other.seconds

    def total(self, n: int) -> int:
        return self.counts.get(n, [0])[0]

    def by_type(self, n: int) -> tuple[int, int, int]:
        row = self.counts.get(n, [0, 0, 0, 0])
        return row[1], row[2], row[3]

    def tsv_rows(self) -> list[str]:
        return [
            f"{n}\t{row[0]}\t{row[1]}\t{row[2]}\t{row[3]}"
            for n, row in sorted(self.counts.items())
        ]


def trusted_graph(n: int, adj: Sequence[int]) -> Graph:
    """Build a Graph from rows already known to be valid (skips validation)."""
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


# ---------------------------------------------------------------------------
# Local structure.


def twin_classes(adj: Sequence[int]) -> list[list[int]]:
    """Classes of at least two vertices sharing the same (nonempty) neighbourhood."""
    groups: dict[int, list[int]] = {}
    for v, row in enumerate(adj):
        if row:
            groups.setdefault(row, []).append(v)
    return [c for c in groups.values() if len(c) > 1]


def _reduced_is_mtf(adj: Sequence[int], n: int, v: int) -> bool:
    """Is the graph with vertex ``v`` deleted still mtf?"""
    if n - 1 <= 2:
        rest = [u for u in range(n) if u != v]
        rows = [_compress_row(adj[u], rest) for u in rest]
        return is_mtf(trusted_graph(len(rest), rows)) if rest else False
    # Only pairs inside N(v) can lose their last common neighbour.
    keep = ~(1 << v)
    nbrs = list(bits(adj[v]))
    for i, a in enumerate(nbrs):
        ra = adj[a] & keep
        for b in nbrs[i + 1:]:
            if not ra & adj[b]:
                return False
    return True


def _compress_row(row: int, verts: Sequence[int]) -> int:
    out = 0
    for i, v in enumerate(verts):
        if row >> v & 1:
            out |= 1 << i
    return out


def is_good_dominating(adj: Sequence[int], n: int, s: VertexSet) -> bool:
    if not s:
        return False
    full = (1 << n) - 1
    dom = s
    for v in bits(s):
        dom |= adj[v]
    if dom != full:
        return False
    outside = full & ~s
    for v in bits(s):
        ns = adj[v] & outside
        if ns == adj[v]:
            # no internal edge at v: distances from v are unchanged (diameter 2)
            continue
        reach = ns
        for w in bits(ns):
            reach |= adj[w]
        if outside & ~reach:
            return False
    return True


def internal_edges(adj: Sequence[int], s: VertexSet) -> tuple[Edge, ...]:
    return tuple((a, b) for a in bits(s) for b in bits(adj[a] & s) if a < b)


def expand_rows(adj: Sequence[int], n: int, s: VertexSet) -> list[int]:
    """Rows of the expansion of ``adj`` by the good dominating set ``s``."""
    new = list(adj)
    nb = 1 << n
    inner = s
    for v in bits(s):
        new[v] = (adj[v] & ~inner) | nb
    new.append(s)
    return new


def expand(g: Graph, s: GoodDominatingSet, check: bool = False) -> Graph:
    if check and not is_good_dominating(g.adj, g.n, s.set):
        raise ValueError("expansion set is not a good dominating set")
    child = Graph(g.n + 1, tuple(expand_rows(g.adj, g.n, s.set)))
    if check and not is_mtf(child):
        raise AssertionError("expansion produced a graph that is not mtf")
    return child


def classify_set(adj: Sequence[int], s: VertexSet) -> GoodDominatingSet:
    edges = internal_edges(adj, s)
    if edges:
        return GoodDominatingSet(s, 2, edges)
    for v, row in enumerate(adj):
        if row == s:
            return GoodDominatingSet(s, 0, (), v)
    return GoodDominatingSet(s, 1)


# ---------------------------------------------------------------------------
# Enumeration of good dominating sets.


def maximal_independent_sets(adj: Sequence[int], n: int) -> list[VertexSet]:
    """Independent dominating sets, i.e. maximal independent sets (Bron-Kerbosch on the complement)."""
    full = (1 << n) - 1
    non = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    out: list[VertexSet] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (non[u] & p).bit_count())
        for v in bits(p & ~non[pivot]):
            bk(r | (1 << v), p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, full, 0)
    return out


def _type2_sets(
    adj: Sequence[int],
    n: int,
    max_size: int,
    size_ok: Callable[[VertexSet, int], bool],
    pairs: Sequence[tuple[int, int]] = (),
) -> list[VertexSet]:
    """Good dominating sets with internal edges, up to ``max_size`` vertices.

    ``pairs`` lists (a, b), a < b, of which exactly one must be chosen.
    """
    full = (1 << n) - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]
    partner = [-1] * n
    for a, b in pairs:
        partner[b] = a
    out: list[VertexSet] = []

    def rec(start: int, s: int, dom: int, size: int, has_edge: bool) -> None:
        for i in range(start, n):
            a = partner[i]
            if a >= 0 and s >> a & 1:
                # partner already chosen: i must stay out
                continue
            bit = 1 << i
            s2 = s | bit
            dom2 = dom | closed[i]
            e2 = has_edge or bool(adj[i] & s)
            if dom2 == full and e2 and size_ok(s2, size + 1) and _pairs_ok(s2, pairs) and is_good_dominating(adj, n, s2):
                out.append(s2)
            if size + 1 < max_size and (dom2 | suffix[i + 1]) == full:
                rec(i + 1, s2, dom2, size + 1, e2)
            if a >= 0:
                # partner absent, so i is compulsory: cannot skip past it
                return
            if (dom | suffix[i + 1]) != full:
                return

    rec(0, 0, 0, 0, False)
    return out


def _pairs_ok(s: VertexSet, pairs: Sequence[tuple[int, int]]) -> bool:
    for a, b in pairs:
        if (s >> a & 1) == (s >> b & 1):
            return False
    return True


def enumerate_good_dominating_sets(
    g: Graph, kinds: Iterable[int] = (0, 1, 2), max_size: Optional[int] = None
) -> list[GoodDominatingSet]:
    """All good dominating sets of an mtf graph of the requested kinds.

    ``max_size`` bounds only kind-2 sets.
    """
    kinds = set(kinds)
    adj, n = g.adj, g.n
    out: list[GoodDominatingSet] = []
    neighbourhoods = {row for row in adj if row}
    if 0 in kinds:
        seen: set[int] = set()
        for v in range(n):
            if adj[v] and adj[v] not in seen:
                seen.add(adj[v])
                out.append(GoodDominatingSet(adj[v], 0, (), v))
    if 1 in kinds:
        for s in maximal_independent_sets(adj, n):
            if s not in neighbourhoods:
                out.append(GoodDominatingSet(s, 1))
    if 2 in kinds:
        bound = n if max_size is None else max_size
        for s in _type2_sets(adj, n, bound, lambda s, k: True):
            out.append(GoodDominatingSet(s, 2, internal_edges(adj, s)))
    return out


# ---------------------------------------------------------------------------
# Canonical reductions.


@dataclass(frozen=True)
class ReductionKey:
    x0: int
    x1: int
    x2: int
    x3: tuple[int, ...]
    x4: Optional[int] = None

    def astuple(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3, self.x4)


def reduction_type(adj: Sequence[int], n: int, v: int, twins: Optional[set[int]] = None) -> int:
    if twins is None:
        twins = {u for c in twin_classes(adj) for u in c}
    if v in twins:
        return 0
    return 1 if _reduced_is_mtf(adj, n, v) else 2


def reduction_key(g: Graph, v: int, with_x4: bool = False) -> ReductionKey:
    """The ordering key of deleting ``v`` from ``g`` (x4 only on request)."""
    adj, n = g.adj, g.n
    deg = [row.bit_count() for row in adj]
    x0 = reduction_type(adj, n, v)
    x1 = deg[v] if x0 == 2 else -deg[v]
    nd = sorted((deg[w] for w in bits(adj[v])), reverse=True)
    x4 = canon.vertex_orbit_canonical_rank(g, v) if with_x4 else None
    return ReductionKey(x0, x1, -sum(nd), tuple(-d for d in nd), x4)


def x3_power_sum(g: Graph, v: int) -> int:
    """The power-sum form of the x3 component: minus the sum of |V|^deg(w) over w in N(v)."""
    return -sum(g.n ** g.degree(w) for w in bits(g.adj[v]))


def restoring_edge_sets(adj: Sequence[int], n: int, v: int) -> list[tuple[Edge, ...]]:
    """Minimum-size edge sets inside N(v) whose insertion makes ``g - v`` mtf again.

    Every returned set restores maximality; all have the smallest possible
    size.  An empty tuple means ``g - v`` is already mtf.
    """
    keep = ~(1 << v)
    nbrs = list(bits(adj[v]))
    broken = [(a, b) for a, b in combinations(nbrs, 2) if not adj[a] & adj[b] & keep]
    if not broken:
        return [()]
    for k in range(1, len(broken) + 1):
        found = [e for e in combinations(broken, k) if _restores(broken, e)]
        if found:
            return found
    raise AssertionError("no edge set restores maximality")


def _restores(broken: Sequence[Edge], chosen: Sequence[Edge]) -> bool:
    # chosen must be triangle-free and leave every other broken pair with a common chosen neighbour
    nb: dict[int, int] = {}
    for a, b in chosen:
        nb[a] = nb.get(a, 0) | (1 << b)
        nb[b] = nb.get(b, 0) | (1 << a)
    for a, b in chosen:
        if nb[a] & nb[b]:
            return False
    cs = set(chosen)
    for a, b in broken:
        if (a, b) not in cs and not nb.get(a, 0) & nb.get(b, 0):
            return False
    return True


def _edge_set_image(perm: Sequence[int], edges: Iterable[Edge]) -> frozenset[Edge]:
    out = []
    for a, b in edges:
        x, y = perm[a], perm[b]
        out.append((x, y) if x < y else (y, x))
    return frozenset(out)


def canonical_edge_insertion(adj: Sequence[int], n: int, v: int) -> tuple[tuple[Edge, ...], canon.CanonicalForm]:
    """Canonical restoring edge set for deleting ``v``, plus the v-coloured canonical form.

    Smallest size first, then the least edge list under the canonical
    labelling of the graph with ``v`` individually coloured.  The choice is
    therefore fixed up to automorphisms stabilising ``v``.
    """
    options = restoring_edge_sets(adj, n, v)
    colours = [0] * n
    colours[v] = 1
    cf = canon.canonical_form_rows(n, adj, colours)
    lab = cf.labeling
    best = min(options, key=lambda es: sorted(tuple(sorted((lab[a], lab[b]))) for a, b in es))
    return best, cf


def edge_sets_equivalent(gens: Sequence[canon.Perm], e1: Iterable[Edge], e2: Iterable[Edge]) -> bool:
    start = _normalise(e1)
    target = _normalise(e2)
    if start == target:
        return True
    seen = {start}
    queue = [start]
    for cur in queue:
        for gen in gens:
            img = _edge_set_image(gen, cur)
            if img == target:
                return True
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return False


def _normalise(edges: Iterable[Edge]) -> frozenset[Edge]:
    return frozenset((a, b) if a < b else (b, a) for a, b in edges)


@dataclass
class CanonicityResult:
    accepted: bool
    # generators of the child's automorphism group, when computed along the way
    generators: Optional[tuple[canon.Perm, ...]] = None
    used_x4: bool = False


def is_canonical_child(
    cadj: Sequence[int], n1: int, w: int, kind: int, removed: Sequence[Edge] = ()
) -> CanonicityResult:
    """Decide whether deleting the new vertex ``w`` is the canonical reduction.

    Key components are computed stage by stage and only for vertices still
    tied with ``w``; the test stops as soon as ``w`` drops out.
    """
    twins = twin_classes(cadj)
    if kind == 0:
        eligible = [u for c in twins for u in c]
    else:
        if twins:
            return CanonicityResult(False)
        if kind == 1:
            eligible = [u for u in range(n1) if u == w or _reduced_is_mtf(cadj, n1, u)]
        else:
            for u in range(n1):
                if u != w and _reduced_is_mtf(cadj, n1, u):
                    return CanonicityResult(False)
            eligible = list(range(n1))

    deg = [row.bit_count() for row in cadj]
    sign = 1 if kind == 2 else -1
    eligible = _keep_min(eligible, w, lambda u: sign * deg[u])
    if eligible is None:
        return CanonicityResult(False)
    if len(eligible) > 1:
        eligible = _keep_min(eligible, w, lambda u: -sum(deg[x] for x in bits(cadj[u])))
        if eligible is None:
            return CanonicityResult(False)
    if len(eligible) > 1:
        eligible = _keep_min(eligible, w, lambda u: tuple(sorted((-deg[x] for x in bits(cadj[u])))))
        if eligible is None:
            return CanonicityResult(False)

    gens = None
    used_x4 = False
    if len(eligible) > 1 and not (kind == 0 and _all_twins_of(cadj, eligible, w)):
        used_x4 = True
        cf = canon.canonical_form_rows(n1, cadj)
        gens = cf.group_generators
        orbit_w = cf.orbit_ids[w]
        top = max(eligible, key=lambda u: cf.labeling[u])
        if cf.orbit_ids[top] != orbit_w:
            return CanonicityResult(False, gens, used_x4)

    if kind != 2:
        return CanonicityResult(True, gens, used_x4)
    best, cfw = canonical_edge_insertion(cadj, n1, w)
    ok = edge_sets_equivalent(cfw.group_generators, removed, best)
    return CanonicityResult(ok, gens, used_x4)


def _all_twins_of(cadj: Sequence[int], eligible: Sequence[int], w: int) -> bool:
    row = cadj[w]
    return all(cadj[u] == row for u in eligible)


def _keep_min(eligible: list[int], w: int, keyfn: Callable[[int], object]) -> Optional[list[int]]:
    kw = keyfn(w)
    keep = []
    for u in eligible:
        ku = keyfn(u)
        if ku < kw:
            return None
        if ku == kw:
            keep.append(u)
    return keep


def is_canonical_expansion(parent: Graph, s: GoodDominatingSet, child: Graph, new_vertex: int) -> bool:
    return is_canonical_child(child.adj, child.n, new_vertex, s.kind, s.internal_edges).accepted


def full_reduction_keys(g: Graph) -> list[ReductionKey]:
    """Complete keys (x4 included) for every vertex; slow, used for verification."""
    cf = canon.canonical_form(g)
    return [
        ReductionKey(*reduction_key(g, v).astuple()[:4], canon.vertex_orbit_canonical_rank(g, v, cf))
        for v in range(g.n)
    ]


def verify_canonical(child: Graph, w: int, kind: int, removed: Sequence[Edge]) -> bool:
    """Independent re-check of an accepted child by computing every vertex key in full."""
    keys = full_reduction_keys(child)
    best = min(k.astuple() for k in keys)
    if keys[w].astuple() != best:
        return False
    if keys[w].x0 != kind:
        return False
    if kind != 2:
        return True
    options = restoring_edge_sets(child.adj, child.n, w)
    if len(options[0]) != len(removed):
        return False
    colours = [0] * child.n
    colours[w] = 1
    cf = canon.canonical_form(child, colours)
    lab = cf.labeling

    def form(es: Iterable[Edge]) -> list:
        return sorted(tuple(sorted((lab[a], lab[b]))) for a, b in es)

    target = min(form(es) for es in options)
    # brute force over the whole stabiliser of w
    _, transversals = canon.schreier_sims(cf.group_generators, child.n)
    for perm in _group_elements(transversals, child.n):
        if form(_edge_set_image(perm, removed)) == target:
            return True
    return False


def _group_elements(transversals: Sequence[dict[int, canon.Perm]], n: int) -> Iterable[canon.Perm]:
    elems: list[canon.Perm] = [tuple(range(n))]
    for t in reversed(transversals):
        elems = [canon._compose(u, e) for u in t.values() for e in elems]
    return elems


# ---------------------------------------------------------------------------
# The generator.


class ChildFilter(Protocol):
    """Hooks used to restrict generation (e.g. to Ramsey graphs)."""

    def admissible(self, node: object, adj: list[int], n: int, s: VertexSet, kind: int) -> bool: ...

    def accept(self, node: object, adj: list[int], n: int, prov: ProvenanceTag) -> tuple[bool, object]: ...


class StopGeneration(Exception):
    pass


@dataclass
class Expansion:
    set: VertexSet
    kind: int
    removed: tuple[Edge, ...] = ()


class MtfGenerator:
    """Depth-first canonical construction path generator.

    ``visitor(graph, kind)`` receives every accepted graph of order
    ``target_n``; raising ``StopGeneration`` from it ends the run.
    """

    def __init__(
        self,
        target_n: int,
        visitor: Optional[Callable[[Graph, int], None]] = None,
        child_filter: Optional[ChildFilter] = None,
        debug: bool = False,
        visit_all_orders: bool = False,
    ) -> None:
        if not 1 <= target_n <= MAX_VERTICES:
            raise ValueError(f"target order must be in 1..{MAX_VERTICES}, got {target_n}")
        self.target_n = target_n
        self.visitor = visitor
        self.filter = child_filter
        self.debug = debug
        self.visit_all_orders = visit_all_orders
        self.stats = GenerationStats()
        self.x4_calls = 0
        self.children_tested = 0

    # -- public -----------------------------------------------------------

    def run(self, seeds: Optional[Iterable[tuple[Graph, object]]] = None) -> GenerationStats:
        """Generate from K1, or from ``(graph, filter_node)`` seed pairs."""
        t0 = time.perf_counter()
        try:
            if seeds is None:
                self.stats.record(1, -1)
                self._visit([0], 1, -1)
                self._construct([0], 1, None, None)
            else:
                for g, node in seeds:
                    self._construct(list(g.adj), g.n, None, node)
        except StopGeneration:
            pass
        self.stats.seconds = time.perf_counter() - t0
        return self.stats

    # -- internals ---------------------------------------------------------

    def _visit(self, adj: list[int], n: int, kind: int) -> None:
        if self.visitor is not None and (n == self.target_n or self.visit_all_orders):
            self.visitor(trusted_graph(n, adj), kind)

    def _construct(self, adj: list[int], n: int, gens: Optional[tuple], node: object) -> None:
        if n >= self.target_n:
            return
        for exp in self._expansions(adj, n, gens):
            if self.filter is not None and not self.filter.admissible(node, adj, n, exp.set, exp.kind):
                continue
            child = expand_rows(adj, n, exp.set)
            n1 = n + 1
            self.children_tested += 1
            res = is_canonical_child(child, n1, n, exp.kind, exp.removed)
            if res.used_x4:
                self.x4_calls += 1
            if not res.accepted:
                continue
            if self.debug:
                self._debug_check(child, n1, exp)
            child_node = None
            if self.filter is not None:
                ok, child_node = self.filter.accept(node, child, n1, ProvenanceTag(exp.kind, n, exp.removed))
                if not ok:
                    continue
            self.stats.record(n1, exp.kind)
            self._visit(child, n1, exp.kind)
            if n1 < self.target_n:
                self._construct(child, n1, res.generators, child_node)

    def _debug_check(self, child: list[int], n1: int, exp: Expansion) -> None:
        g = trusted_graph(n1, child)
        if not is_mtf(g):
            raise AssertionError("accepted child is not mtf")
        if not verify_canonical(g, n1 - 1, exp.kind, exp.removed):
            raise AssertionError(f"canonicity re-check failed for kind {exp.kind} child")

    def _expansions(self, adj: list[int], n: int, gens: Optional[tuple]) -> list[Expansion]:
        """One expansion per orbit of candidate good dominating sets, after lookaheads."""
        if n == 1:
            return [Expansion(1, 1)]
        if gens is None:
            gens = canon.canonical_form_rows(n, adj).group_generators
        deg = [row.bit_count() for row in adj]
        twins = twin_classes(adj)
        candidates: list[tuple[VertexSet, int]] = []

        # kind 0: neighbourhoods of vertices at least as heavy as every double vertex
        min_deg0 = max((deg[c[0]] for c in twins), default=0)
        seen: set[int] = set()
        for v in range(n):
            row = adj[v]
            if row and deg[v] >= min_deg0 and row not in seen:
                seen.add(row)
                candidates.append((row, 0))

        if not twins:
            nbhds = {row for row in adj}
            for s in maximal_independent_sets(adj, n):
                if s not in nbhds:
                    candidates.append((s, 1))

        if all(len(c) == 2 for c in twins):
            m = min(deg)
            min_mask = 0
            for v in range(n):
                if deg[v] == m:
                    min_mask |= 1 << v

            def size_ok(s: VertexSet, k: int) -> bool:
                return k <= m or (k == m + 1 and s & min_mask == min_mask)

            pairs = [(c[0], c[1]) for c in twins]
            for s in _type2_sets(adj, n, m + 1, size_ok, pairs):
                candidates.append((s, 2))

        if not candidates:
            return []
        masks = [s for s, _ in candidates]
        out = []
        for cls in canon.set_orbit_classes(gens, masks):
            s, kind = candidates[min(cls)]
            removed = internal_edges(adj, s) if kind == 2 else ()
            out.append(Expansion(s, kind, removed))
        return out


def generate_mtf(
    target_n: int,
    visitor: Optional[Callable[[Graph], None]] = None,
    debug: bool = False,
) -> GenerationStats:
    """Visit one graph per isomorphism class of mtf graphs on ``target_n`` vertices."""
    wrapped = None if visitor is None else (lambda g, kind: visitor(g))
    return MtfGenerator(target_n, wrapped, debug=debug).run()


def mtf_graphs(target_n: int) -> list[Graph]:
    out: list[Graph] = []
    generate_mtf(target_n, out.append)
    return out
