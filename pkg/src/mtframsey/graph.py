"""Dense small graphs stored as one bit-row per vertex.

Row ``adj[v]`` is an int whose bit ``w`` is set iff ``v`` and ``w`` are
adjacent.  Vertex sets are plain ints used as bit masks (``VertexSet``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) outside 0..{n - 1}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in bits(self.adj[v] >> (v + 1) << (v + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for v in range(g.n):
        higher = adj[v] >> (v + 1) << (v + 1)
        for w in bits(higher):
            if adj[v] & adj[w]:
                return False
    return True


def adds_triangle_everywhere(g: Graph) -> bool:
    """True iff inserting any missing edge would create a triangle."""
    adj = g.adj
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if not adj[v] >> w & 1 and not adj[v] & adj[w]:
                return False
    return True


def is_mtf(g: Graph) -> bool:
    """Maximal triangle-free test.

    For more than two vertices this is triangle-free plus diameter at most
    two, which for a triangle-free graph is the same as every non-adjacent
    pair sharing a neighbour.
    """
    if not is_triangle_free(g):
        return False
    if g.n <= 2:
        return adds_triangle_everywhere(g)
    return diameter_at_most_two(g)


def diameter_at_most_two(g: Graph) -> bool:
    adj = g.adj
    full = g.full_mask
    for v in range(g.n):
        reach = adj[v] | (1 << v)
        for w in bits(adj[v]):
            reach |= adj[w]
        if reach != full:
            return False
    return True


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    verts = list(bits(s))
    if not verts:
        raise ValueError("induced subgraph of the empty vertex set")
    if verts[-1] >= g.n:
        raise ValueError("vertex set exceeds the host graph")
    return Graph(len(verts), tuple(_compress(g.adj[v], verts) for v in verts))


def _compress(row: int, verts: Sequence[int]) -> int:
    out = 0
    for i, v in enumerate(verts):
        if row >> v & 1:
            out |= 1 << i
    return out


def induced_rows(adj: Sequence[int], verts: Sequence[int]) -> tuple[int, ...]:
    """Adjacency rows of the subgraph induced on ``verts`` (in that order)."""
    return tuple(_compress(adj[v], verts) for v in verts)


def _pattern_order(pattern: Graph) -> list[int]:
    # Descending degree, preferring vertices adjacent to those already placed.
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        v = max(remaining, key=lambda u: ((pattern.adj[u] & placed).bit_count(), deg[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` embeds injectively into ``host`` (not necessarily induced)."""
    if pattern.n > host.n:
        return False
    if pattern.n == 0:
        return True
    if pattern.num_edges() > host.num_edges():
        return False
    order = _pattern_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    hadj = host.adj
    padj = pattern.adj
    # earlier[i]: positions j < i whose pattern vertices are adjacent to order[i]
    earlier = [[j for j in range(i) if padj[order[i]] >> order[j] & 1] for i in range(pattern.n)]
    by_degree = [mask_of(w for w in range(host.n) if hdeg[w] >= pdeg[order[i]]) for i in range(pattern.n)]
    image = [0] * pattern.n

    def extend(i: int, used: int) -> bool:
        if i == pattern.n:
            return True
        cand = by_degree[i] & ~used
        for j in earlier[i]:
            cand &= hadj[image[j]]
            if not cand:
                return False
        for w in bits(cand):
            image[i] = w
            if extend(i + 1, used | (1 << w)):
                return True
        return False

    return extend(0, 0)


def spanning_subgraph_of(small: Graph, big: Graph) -> bool:
    """True iff some bijection maps every edge of ``small`` onto an edge of ``big``."""
    if small.n != big.n:
        raise ValueError(f"order mismatch: {small.n} vs {big.n}")
    return contains_subgraph(big, small)


# ---------------------------------------------------------------------------
# Named families.  Numbering is fixed: centres first, then leaves in order.


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph.empty(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(x: int) -> Graph:
    """P_x: path on ``x`` vertices 0-1-...-(x-1)."""
    if x < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(x, [(i, i + 1) for i in range(x - 1)])


def star(s: int) -> Graph:
    """K_{1,s}: centre 0, leaves 1..s."""
    if s < 1:
        raise ValueError("star needs s >= 1")
    return Graph.from_edges(s + 1, [(0, i) for i in range(1, s + 1)])


def t_plus(s: int) -> Graph:
    """T_{s+}: K_{1,s} (centre 0, leaves 1..s) with a pendant vertex s+1 on leaf 1."""
    if s < 1:
        raise ValueError("T_{s+} needs s >= 1")
    return Graph.from_edges(s + 2, [(0, i) for i in range(1, s + 1)] + [(1, s + 1)])


def delta(s: int) -> Graph:
    """Delta_s: K_{1,s} (centre 0, leaves 1..s) plus the leaf edge 1-2."""
    if s < 2:
        raise ValueError("Delta_s needs s >= 2")
    return Graph.from_edges(s + 1, [(0, i) for i in range(1, s + 1)] + [(1, 2)])


def double_star(s: int, t: int) -> Graph:
    """D_{s,t}: centres 0 and 1 joined; leaves 2..s+1 on 0, then t leaves on 1."""
    if s < 0 or t < 0:
        raise ValueError("double star needs s, t >= 0")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(s)]
    edges += [(1, 2 + s + i) for i in range(t)]
    return Graph.from_edges(s + t + 2, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` keeps vertices 0..n1-1, ``g2`` is shifted to n1..n1+n2-1."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def complete_minus(n: int, removed: Graph) -> Graph:
    """K_n with the edges of ``removed`` (placed on vertices 0..removed.n-1) deleted."""
    if removed.n > n:
        raise ValueError(f"cannot remove a {removed.n}-vertex graph from K_{n}")
    base = complete(n)
    adj = list(base.adj)
    for v, row in enumerate(removed.adj):
        adj[v] &= ~row
    return Graph(n, tuple(adj))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    js = set(jumps)
    return Graph.from_edges(n, [(i, (i + j) % n) for i in range(n) for j in js if (i + j) % n != i])


def independence_number(g: Graph) -> int:
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        v = (cand & -cand).bit_length() - 1
        grow(cand & ~g.adj[v] & ~(1 << v), size + 1)
        grow(cand & ~(1 << v), size)

    grow(g.full_mask, 0)
    return best


def all_pairs(mask: VertexSet) -> Iterator[tuple[int, int]]:
    return combinations(list(bits(mask)), 2)
