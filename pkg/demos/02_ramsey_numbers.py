"""
Triangle Ramsey numbers from mtf graphs
=======================================

R(K3, G) <= r exactly when no mtf graph on r vertices has G missing from
its complement.  The pruned generator only grows graphs that are still
Ramsey graphs, so small values come out in seconds.

Run: python3 demos/02_ramsey_numbers.py
"""

from __future__ import annotations

import time

from mtframsey import graph6
from mtframsey.driver import all_ramsey_graphs, expand_to_all_ramsey_graphs_general, ramsey_number, verify_ramsey_graph
from mtframsey.family import parse_graph
from mtframsey.ramseyprune import RamseyContext

for spec in ("K3", "K4", "K5", "K5-e", "C5", "K6-P4"):
    g = parse_graph(spec)
    ctx = RamseyContext(g)
    t0 = time.perf_counter()
    res = ramsey_number(g, ctx=ctx)
    dt = time.perf_counter() - t0
    # the witness is an mtf Ramsey graph one vertex short of the answer
    ok = verify_ramsey_graph(res.witness, g)
    print(f"R(K3,{spec}) = {res.value}  witness {graph6.encode(res.witness)} verified={ok}  {dt:.2f} s  {dict(ctx.stats)}")

# every Ramsey graph for K4 on 8 vertices: first the maximal ones, then all
k4 = parse_graph("K4")
mtf = all_ramsey_graphs(k4, 8)
general = expand_to_all_ramsey_graphs_general(mtf, k4)
print(f"\nK4, 8 vertices: {len(mtf)} mtf Ramsey graphs, {len(general)} triangle-free ones")

# generation can resume from the complete list at a smaller order
k5 = parse_graph("K5")
seeds = all_ramsey_graphs(k5, 11)
print(f"K5: {len(seeds)} mtf Ramsey graphs on 11 vertices, {len(all_ramsey_graphs(k5, 13, seed_graphs=seeds))} on 13")
