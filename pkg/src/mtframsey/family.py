"""Names for the graphs that show up in triangle Ramsey tables.

Accepted forms (case-sensitive, no spaces)::

    K<n>  K<n>-e  K<n>-K1,<s>  K<n>-K1,<s>-e  K<n>-K1,<s>-K1,<t>
    K<n>-T<s>+  K<n>-Delta<s> (or K<n>-Δ<s>)  K<n>-D<s>,<t>  K<n>-P<x>
    C<n>  P<n>  <A>u<B> (disjoint union)

Anything else is read as graph6.  In ``K<n>-K1,<s>-e`` the extra edge is
disjoint from the star, so it needs ``s + 3 <= n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import graph6
from .graph import (
    Graph,
    complete,
    complete_minus,
    cycle,
    delta,
    disjoint_union,
    double_star,
    path,
    star,
    t_plus,
)


@dataclass(frozen=True)
class Family:
    spec: str
    kind: str
    params: tuple[int, ...]
    graph: Graph


_PATTERNS: list[tuple[str, str]] = [
    ("K", r"K(\d+)"),
    ("K-e", r"K(\d+)-e"),
    ("K-K1s", r"K(\d+)-K1,(\d+)"),
    ("K-K1s-e", r"K(\d+)-K1,(\d+)-e"),
    ("K-K1s-K1t", r"K(\d+)-K1,(\d+)-K1,(\d+)"),
    ("K-T", r"K(\d+)-T(\d+)\+"),
    ("K-Delta", r"K(\d+)-(?:Delta|Δ)(\d+)"),
    ("K-D", r"K(\d+)-D(\d+),(\d+)"),
    ("K-P", r"K(\d+)-P(\d+)"),
    ("C", r"C(\d+)"),
    ("P", r"P(\d+)"),
]


def _two_stars(n: int, s: int, t: int) -> Graph:
    if s + t + 2 > n:
        raise ValueError(f"K_{{1,{s}}} and K_{{1,{t}}} do not fit disjointly in K_{n}")
    edges = [(0, i) for i in range(1, s + 1)]
    c = s + 1
    edges += [(c, c + j) for j in range(1, t + 1)]
    return Graph.from_edges(s + t + 2, edges)


def _build(kind: str, p: tuple[int, ...]) -> Graph:
    if kind == "K":
        return complete(p[0])
    if kind == "K-e":
        return complete_minus(p[0], Graph.from_edges(2, [(0, 1)]))
    if kind == "K-K1s":
        return complete_minus(p[0], star(p[1]))
    if kind == "K-K1s-e":
        return complete_minus(p[0], _two_stars(p[0], p[1], 1))
    if kind == "K-K1s-K1t":
        return complete_minus(p[0], _two_stars(*p))
    if kind == "K-T":
        return complete_minus(p[0], t_plus(p[1]))
    if kind == "K-Delta":
        return complete_minus(p[0], delta(p[1]))
    if kind == "K-D":
        return complete_minus(p[0], double_star(p[1], p[2]))
    if kind == "K-P":
        return complete_minus(p[0], path(p[1]))
    if kind == "C":
        return cycle(p[0])
    if kind == "P":
        return path(p[0])
    raise AssertionError(kind)


def _named(spec: str) -> Family | None:
    for kind, pat in _PATTERNS:
        m = re.fullmatch(pat, spec)
        if m:
            params = tuple(int(x) for x in m.groups())
            return Family(spec, kind, params, _build(kind, params))
    return None


def parse_family(spec: str) -> Family:
    spec = spec.strip()
    if not spec:
        raise ValueError("empty graph spec")
    fam = _named(spec)
    if fam is not None:
        return fam
    parts = [_named(x) for x in spec.split("u")] if "u" in spec else []
    if parts and all(parts):
        g = parts[0].graph
        for f in parts[1:]:
            g = disjoint_union(g, f.graph)
        return Family(spec, "union", (), g)
    try:
        g = graph6.decode(spec)
    except ValueError as exc:
        raise ValueError(f"not a family spec or graph6 string: {spec!r}") from exc
    return Family(spec, "graph6", (), g)


def parse_graph(spec: str) -> Graph:
    return parse_family(spec).graph
