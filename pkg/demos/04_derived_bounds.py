"""
Bounds from known Ramsey numbers
================================

Counting arguments turn a few known values into exact values for graphs a
little below a complete graph.  Nothing here searches: each bound is an
integer inequality, and the log shows the numbers plugged in.

Run: python3 demos/04_derived_bounds.py
"""

from __future__ import annotations

from mtframsey.theory import COROLLARY_AXIOMS, corollary_table, derive_bounds, lemma1_hypothesis

print("axioms:", COROLLARY_AXIOMS)

# the star inequality at its boundary
for r in (34, 35, 36):
    print(f"(r-10)(2+1) > 9*8 at r={r}:", lemma1_hypothesis(r, 10, 2))

for d in corollary_table():
    print(f"{d.spec:14s} {d.summary()}")

# one full log
d = derive_bounds("K10-T3+", COROLLARY_AXIOMS)
print("\n" + "\n".join(d.log))

# the two-stars bound needs room for both stars
d = derive_bounds("K10-K1,8-e", COROLLARY_AXIOMS)
print("\nK10-K1,8-e:", d.summary(), d.flags)
