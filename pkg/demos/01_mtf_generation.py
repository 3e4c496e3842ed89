"""
Generating maximal triangle-free graphs
=======================================

Every mtf graph on n+1 vertices arises from one on n vertices by adding a
vertex joined to a good dominating set.  The generator walks that tree and
keeps one copy of each isomorphism class.

Run: python3 demos/01_mtf_generation.py
"""

from __future__ import annotations

from mtframsey import graph6
from mtframsey.canon import canonical_form
from mtframsey.graph import cycle, is_mtf
from mtframsey.mtfgen import enumerate_good_dominating_sets, expand, generate_mtf, mtf_graphs

# C5 is the smallest mtf graph that is not complete bipartite
c5 = cycle(5)
print("C5 is mtf:", is_mtf(c5))

# its good dominating sets, by kind: 0 = a neighbourhood, 2 = has internal edges
for s in enumerate_good_dominating_sets(c5):
    print(f"  set {sorted(v for v in range(5) if s.set >> v & 1)} kind {s.kind}")

# expanding by a neighbourhood duplicates a vertex
child = expand(c5, enumerate_good_dominating_sets(c5, kinds=[0])[0])
print("expanded child:", graph6.encode(child), "mtf:", is_mtf(child))

# counts per order, split by the kind of the last (canonical) step
stats = generate_mtf(13)
print("\nn\ttotal\ttype0\ttype1\ttype2")
for row in stats.tsv_rows()[3:]:
    print(row)
print(f"({stats.seconds:.2f} s)")

# the 10 mtf graphs on 8 vertices, pairwise non-isomorphic
eight = mtf_graphs(8)
assert len({canonical_form(g).key for g in eight}) == len(eight)
for g in eight:
    print(graph6.encode(g), g.num_edges(), "edges")
