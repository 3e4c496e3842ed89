"""
R(K3, G) for every small graph
==============================

Candidates are handled in descending edge count at each order r, so that
a graph proven to have R <= r settles its subgraphs for free, and a Ramsey
graph found for one candidate is tried on the rest first.

Run: python3 demos/03_classify_small_graphs.py
"""

from __future__ import annotations

import collections

from mtframsey import graph6
from mtframsey.driver import candidate_graphs, classify_with_witnesses, components
from mtframsey.theory import disconnected_union_rule

for order in (4, 5):
    for connected in (True, False):
        cands = candidate_graphs(order, connected=connected)
        results = classify_with_witnesses(cands)
        hist = dict(sorted(collections.Counter(c.value for c in results).items()))
        kind = "connected" if connected else "disconnected"
        print(f"order {order}, {kind}: {len(cands)} graphs, by R(K3,G): {hist}")

# a few rows in detail
print("\ngraph6\tedges\tR(K3,G)\twitness")
for c in classify_with_witnesses(candidate_graphs(4, connected=True)):
    print(f"{graph6.encode(c.graph)}\t{c.graph.num_edges()}\t{c.value}\t{graph6.encode(c.witness)}")

# the union rule predicts some disconnected values from their parts
values = {graph6.encode(c.graph): c.value for c in classify_with_witnesses(candidate_graphs(3) + candidate_graphs(2) + candidate_graphs(1))}
for c in classify_with_witnesses(candidate_graphs(4, connected=False)):
    parts = components(c.graph)
    if len(parts) == 2:
        known = {p: values.get(graph6.encode(p)) for p in parts}
        if None not in known.values():
            print(graph6.encode(c.graph), "computed", c.value, "union rule", disconnected_union_rule(*parts, known))
