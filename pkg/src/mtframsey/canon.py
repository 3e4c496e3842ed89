"""Canonical labelling and automorphism groups of small dense graphs.

The search is the usual individualise-and-refine tree: refine an ordered
partition to an equitable one, branch on the first largest non-singleton
cell, and keep the leaf whose relabelled adjacency is lexicographically
least.  Leaves that relabel to the same graph give automorphisms, which
prune equivalent branches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graph import Graph, VertexSet, bits

Perm = tuple[int, ...]


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    key: tuple[int, ...]
    labeling: Perm
    group_generators: tuple[Perm, ...]
    orbit_ids: tuple[int, ...]
    _order: list = field(default_factory=list, compare=False, repr=False)

    @property
    def canonical_bytes(self) -> bytes:
        """Row-major upper-triangle bits of the canonically relabelled matrix."""
        out = bytearray([self.n])
        acc = 0
        nb = 0
        for i in range(self.n):
            row = self.key[i]
            for j in range(i + 1, self.n):
                acc = acc << 1 | (row >> j & 1)
                nb += 1
                if nb == 8:
                    out.append(acc)
                    acc = nb = 0
        if nb:
            out.append(acc << (8 - nb))
        return bytes(out)

    @property
    def vertex_orbits(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v, o in enumerate(self.orbit_ids):
            groups.setdefault(o, []).append(v)
        return list(groups.values())

    def canonical_graph(self) -> Graph:
        return Graph(self.n, self.key)


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until every cell is equitable.

    Each vertex is signed by its neighbour count in every cell; a cell splits
    into fragments ordered by signature, in place.  The result depends only
    on the graph and the input partition, never on vertex names.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                sig = tuple([(row & m).bit_count() for m in masks])
                g = groups.get(sig)
                if g is None:
                    groups[sig] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not split:
            return cells


def _leaf_key(adj: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    key = []
    for v in lab:
        row = 0
        for w in bits(adj[v]):
            row |= 1 << pos[w]
        key.append(row)
    return tuple(key)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class _Search:
    def __init__(self, n: int, adj: Sequence[int]) -> None:
        self.n = n
        self.adj = adj
        self.gens: list[Perm] = []
        self.first_lab: Optional[list[int]] = None
        self.first_key: Optional[tuple[int, ...]] = None
        self.first_path: list[int] = []
        self.best_lab: Optional[list[int]] = None
        self.best_key: Optional[tuple[int, ...]] = None
        self.best_path: list[int] = []

    def _record_automorphism(self, from_lab: Sequence[int], to_lab: Sequence[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(from_lab, to_lab):
            perm[a] = b
        gamma = tuple(perm)
        if any(gamma[i] != i for i in range(self.n)) and gamma not in self.gens:
            self.gens.append(gamma)

    def _leaf(self, cells: list[list[int]], prefix: list[int]) -> int:
        lab = [c[0] for c in cells]
        key = _leaf_key(self.adj, lab)
        depth = len(prefix)
        if self.first_key is None:
            self.first_lab, self.first_key, self.first_path = lab, key, list(prefix)
            self.best_lab, self.best_key, self.best_path = lab, key, list(prefix)
            return depth
        if key == self.first_key:
            self._record_automorphism(self.first_lab, lab)
            return _common_prefix(prefix, self.first_path)
        if key == self.best_key:
            self._record_automorphism(self.best_lab, lab)
            return _common_prefix(prefix, self.best_path)
        if key < self.best_key:
            self.best_lab, self.best_key, self.best_path = lab, key, list(prefix)
        return depth

    def node(self, cells: list[list[int]], prefix: list[int]) -> int:
        """Explore a subtree; returns the depth the caller should unwind to."""
        depth = len(prefix)
        if len(cells) == self.n:
            return self._leaf(cells, prefix)
        tc = 0
        size = 1
        for i, c in enumerate(cells):
            if len(c) > size:
                tc, size = i, len(c)
        target = sorted(cells[tc])
        explored: list[int] = []
        seen_gens = -1
        uf: Optional[_UnionFind] = None
        for v in target:
            if explored:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    uf = _UnionFind(self.n)
                    for g in self.gens:
                        if all(g[p] == p for p in prefix):
                            for x in range(self.n):
                                uf.union(x, g[x])
                rv = uf.find(v)
                if any(uf.find(u) == rv for u in explored):
                    continue
            explored.append(v)
            child = cells[:tc] + [[v], [u for u in cells[tc] if u != v]] + cells[tc + 1:]
            prefix.append(v)
            back = self.node(refine(self.adj, child), prefix)
            prefix.pop()
            if back < depth:
                return back
        return depth


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def _initial_cells(n: int, colours: Optional[Sequence[int]]) -> list[list[int]]:
    if colours is None:
        return [list(range(n))]
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(colours[v], []).append(v)
    return [groups[c] for c in sorted(groups)]


def canonical_form(g: Graph, colours: Optional[Sequence[int]] = None) -> CanonicalForm:
    """Canonically label ``g``, optionally respecting a vertex colouring.

    With ``colours`` only colour-preserving relabellings are identified and
    the generators span the colour-preserving automorphism group.
    """
    return canonical_form_rows(g.n, g.adj, colours)


def canonical_form_rows(n: int, adj: Sequence[int], colours: Optional[Sequence[int]] = None) -> CanonicalForm:
    if n == 0:
        return CanonicalForm(0, (), (), (), ())
    search = _Search(n, adj)
    search.node(refine(adj, _initial_cells(n, colours)), [])
    labeling = [0] * n
    for i, v in enumerate(search.best_lab):
        labeling[v] = i
    uf = _UnionFind(n)
    for gen in search.gens:
        for x in range(n):
            uf.union(x, gen[x])
    orbit_ids = tuple(uf.find(v) for v in range(n))
    return CanonicalForm(n, search.best_key, tuple(labeling), tuple(search.gens), orbit_ids)


def automorphism_generators(g: Graph) -> tuple[Perm, ...]:
    return canonical_form(g).group_generators


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    for v in range(g.n):
        row = 0
        for w in bits(g.adj[v]):
            row |= 1 << perm[w]
        if row != g.adj[perm[v]]:
            return False
    return True


# ---------------------------------------------------------------------------
# Group order by Schreier-Sims.


def _compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a[b[x]]."""
    return tuple([a[x] for x in b])


def _inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _transversal(point: int, gens: list[Perm]) -> dict[int, Perm]:
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    trans = {point: ident}
    queue = [point]
    for p in queue:
        for s in gens:
            q = s[p]
            if q not in trans:
                trans[q] = _compose(s, trans[p])
                queue.append(q)
    return trans


def schreier_sims(gens: Iterable[Perm], n: int) -> tuple[list[int], list[dict[int, Perm]]]:
    """Base and basic transversals for the group generated by ``gens``."""
    ident = tuple(range(n))
    gens = [g for g in gens if g != ident]
    if not gens:
        return [], []
    base: list[int] = []
    strong: list[list[Perm]] = []

    def moved_point(h: Perm) -> int:
        for x in range(n):
            if h[x] != x and x not in base:
                return x
        raise AssertionError("element fixes every point outside the base")

    base.append(moved_point(gens[0]))
    strong.append(list(gens))
    trans: list[Optional[dict[int, Perm]]] = [None]

    def get_trans(level: int) -> dict[int, Perm]:
        if trans[level] is None:
            trans[level] = _transversal(base[level], strong[level]) if strong[level] else {base[level]: ident}
        return trans[level]

    def strip(h: Perm, start: int) -> tuple[Perm, int]:
        for level in range(start, len(base)):
            x = h[base[level]]
            t = get_trans(level)
            if x not in t:
                return h, level
            h = _compose(_inverse(t[x]), h)
        return h, len(base)

    i = 0
    while i >= 0:
        restart = False
        t = get_trans(i)
        for p, up in list(t.items()):
            for s in list(strong[i]):
                sp = s[p]
                h = _compose(_inverse(t[sp]), _compose(s, up))
                h, j = strip(h, i + 1)
                if h != ident:
                    if j == len(base):
                        base.append(moved_point(h))
                        strong.append([])
                        trans.append(None)
                    for level in range(i + 1, j + 1):
                        strong[level].append(h)
                        trans[level] = None
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return base, [get_trans(level) for level in range(len(base))]


def order_of_group(gens: Iterable[Perm], n: int) -> int:
    _, transversals = schreier_sims(gens, n)
    order = 1
    for t in transversals:
        order *= len(t)
    return order


def group_order(cf: CanonicalForm) -> int:
    if not cf._order:
        cf._order.append(order_of_group(cf.group_generators, cf.n))
    return cf._order[0]


# ---------------------------------------------------------------------------
# Orbits on vertices and vertex sets.


def image_of_set(perm: Perm, s: VertexSet) -> VertexSet:
    out = 0
    for v in bits(s):
        out |= 1 << perm[v]
    return out


def set_orbit_classes(gens: Sequence[Perm], sets: Sequence[VertexSet]) -> list[list[int]]:
    """Partition the indices of ``sets`` by the group generated by ``gens``.

    Images falling outside ``sets`` are tracked too, so the classes are exact
    even when ``sets`` is not closed under the group.
    """
    index: dict[VertexSet, int] = {}
    universe: list[VertexSet] = []
    for s in sets:
        if s not in index:
            index[s] = len(universe)
            universe.append(s)
    parent = list(range(len(universe)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    k = 0
    while k < len(universe):
        s = universe[k]
        for gen in gens:
            t = image_of_set(gen, s)
            j = index.get(t)
            if j is None:
                j = len(universe)
                index[t] = j
                universe.append(t)
                parent.append(j)
            ra, rb = find(k), find(j)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        k += 1
    classes: dict[int, list[int]] = {}
    for i, s in enumerate(sets):
        classes.setdefault(find(index[s]), []).append(i)
    return list(classes.values())


def set_orbits(g: Graph, sets: Sequence[VertexSet], gens: Optional[Sequence[Perm]] = None) -> list[list[VertexSet]]:
    if gens is None:
        gens = automorphism_generators(g)
    return [[sets[i] for i in cls] for cls in set_orbit_classes(gens, sets)]


def vertex_orbit_canonical_rank(g: Graph, v: int, cf: Optional[CanonicalForm] = None) -> int:
    """Minus the largest canonical label carried by any vertex in the orbit of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    if cf is None:
        cf = canonical_form(g)
    orbit = cf.orbit_ids[v]
    return -max(cf.labeling[w] for w in range(g.n) if cf.orbit_ids[w] == orbit)
