from __future__ import annotations

import random

import pytest

from mtframsey import canon, graph6
from mtframsey.canon import canonical_form
from mtframsey.graph import Graph, complete, cycle, is_mtf, mask_of, petersen
from mtframsey.mtfgen import (
    GenerationStats,
    GoodDominatingSet,
    MtfGenerator,
    StopGeneration,
    canonical_edge_insertion,
    enumerate_good_dominating_sets,
    expand,
    full_reduction_keys,
    generate_mtf,
    is_canonical_expansion,
    is_good_dominating,
    mtf_graphs,
    reduction_key,
    restoring_edge_sets,
    twin_classes,
    x3_power_sum,
)
from mtframsey.oracle import brute_good_sets
from mtframsey.parallel import generate_mtf_parallel

# order: (total, type0, type1, type2)
COUNTS = {
    4: (2, 2, 0, 0),
    5: (3, 2, 0, 1),
    6: (4, 4, 0, 0),
    7: (6, 6, 0, 0),
    8: (10, 9, 0, 1),
    9: (16, 15, 0, 1),
    10: (31, 29, 1, 1),
    11: (61, 57, 3, 1),
    12: (147, 139, 4, 4),
    13: (392, 368, 15, 9),
}


def test_good_sets_of_c5():
    c5 = cycle(5)
    assert len(enumerate_good_dominating_sets(c5, kinds=[0])) == 5
    assert enumerate_good_dominating_sets(c5, kinds=[1]) == []
    mine = {s.set for s in enumerate_good_dominating_sets(c5, kinds=[2], max_size=2)}
    brute = {s for s, kind in brute_good_sets(c5) if kind == 2 and s.bit_count() <= 2}
    assert mine == brute


def test_good_sets_match_subset_scan(mtf_by_order):
    checked = 0
    for n in range(2, 12):
        for g in mtf_by_order[n]:
            mine = {(s.set, s.kind) for s in enumerate_good_dominating_sets(g)}
            assert mine == set(brute_good_sets(g))
            checked += 1
    assert len(mtf_by_order[11]) == 61
    assert checked == sum(len(mtf_by_order[n]) for n in range(2, 12))


def test_good_set_fields(mtf_by_order):
    for g in mtf_by_order[9]:
        for s in enumerate_good_dominating_sets(g):
            assert is_good_dominating(g.adj, g.n, s.set)
            assert (s.kind == 2) == bool(s.internal_edges)
            if s.kind == 0:
                assert g.adj[s.witness_vertex] == s.set


def test_expand_duplicates_vertex():
    c5 = cycle(5)
    child = expand(c5, GoodDominatingSet(c5.adj[0], 0, (), 0), check=True)
    assert child.n == 6 and is_mtf(child)
    assert child.adj[5] == c5.adj[0]
    assert [sorted(c) for c in twin_classes(child.adj)] == [[0, 5]]


def test_expand_kind_two_edge_arithmetic(mtf_by_order):
    for g in mtf_by_order[8]:
        for s in enumerate_good_dominating_sets(g, kinds=[2]):
            child = expand(g, s, check=True)
            assert child.num_edges() == g.num_edges() - len(s.internal_edges) + s.set.bit_count()


def test_expand_rejects_bad_set():
    with pytest.raises(ValueError):
        expand(cycle(5), GoodDominatingSet(mask_of([0]), 1), check=True)


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_counts_by_type(n):
    stats = generate_mtf(n)
    assert (stats.total(n), *stats.by_type(n)) == COUNTS[n]


def test_outputs_distinct_and_mtf():
    seen: dict[int, set] = {}

    def visit(g, kind):
        assert is_mtf(g)
        key = canonical_form(g).canonical_bytes
        bucket = seen.setdefault(g.n, set())
        assert key not in bucket
        bucket.add(key)

    stats = MtfGenerator(14, visit, visit_all_orders=True).run()
    assert len(seen[14]) == stats.total(14) == 1274
    for n, row in stats.counts.items():
        if n >= 4:
            assert row[0] == row[1] + row[2] + row[3]


def test_debug_generation_to_twelve():
    gen = MtfGenerator(12, debug=True, visit_all_orders=True)
    stats = gen.run()
    assert stats.total(12) == 147
    assert gen.children_tested > stats.total(12)


def test_stop_generation():
    seen = []

    def visit(g, kind):
        seen.append(g)
        raise StopGeneration

    MtfGenerator(10, visit).run()
    assert len(seen) == 1


def test_small_orders():
    assert [len(mtf_graphs(n)) for n in (1, 2, 3)] == [1, 1, 1]
    with pytest.raises(ValueError):
        MtfGenerator(0)
    with pytest.raises(ValueError):
        MtfGenerator(65)


def test_keys_equal_on_orbits(mtf_by_order):
    for g in mtf_by_order[10]:
        cf = canonical_form(g)
        keys = full_reduction_keys(g)
        for cls in cf.vertex_orbits:
            assert len({keys[v] for v in cls}) == 1


def test_twins_tie_completely():
    c5 = cycle(5)
    child = expand(c5, GoodDominatingSet(c5.adj[0], 0, (), 0))
    keys = full_reduction_keys(child)
    assert keys[0] == keys[5] and keys[0].x0 == 0
    assert min(k.astuple() for k in keys) == keys[5].astuple()


def test_key_signs(mtf_by_order):
    for n in (8, 9, 10):
        for g in mtf_by_order[n]:
            for v in range(n):
                k = reduction_key(g, v)
                assert k.x1 == (g.degree(v) if k.x0 == 2 else -g.degree(v))
                assert k.x2 == -sum(g.degree(w) for w in g.neighbours(v))


def test_x3_string_matches_power_sum():
    rng = random.Random(4)
    for _ in range(20_000):
        n = rng.randint(2, 20)
        k = rng.randint(1, n - 1)
        a = [rng.randrange(n) for _ in range(k)]
        b = [rng.randrange(n) for _ in range(k)]
        sa = tuple(sorted((-d for d in a)))
        sb = tuple(sorted((-d for d in b)))
        pa = -sum(n**d for d in a)
        pb = -sum(n**d for d in b)
        assert (sa < sb) == (pa < pb) and (sa == sb) == (pa == pb)


def test_x3_power_sum_on_graphs(mtf_by_order):
    for g in mtf_by_order[9]:
        for v in range(g.n):
            for w in range(g.n):
                if g.degree(v) != g.degree(w):
                    continue
                kv, kw = reduction_key(g, v).x3, reduction_key(g, w).x3
                assert (kv < kw) == (x3_power_sum(g, v) < x3_power_sum(g, w))


def test_canonical_edge_insertion_examples():
    # deleting a vertex of C5 leaves P4, restored by a single edge
    c5 = cycle(5)
    sets = restoring_edge_sets(c5.adj, 5, 0)
    assert sets == [((1, 4),)]
    best, _ = canonical_edge_insertion(c5.adj, 5, 0)
    assert best == ((1, 4),)
    # a twin can be deleted without repair
    child = expand(c5, GoodDominatingSet(c5.adj[0], 0, (), 0))
    assert restoring_edge_sets(child.adj, 6, 5) == [()]
    assert generate_mtf(5).by_type(5)[2] == 1


def test_canonical_insertion_respects_symmetry():
    g = petersen()
    for v in range(10):
        best, cf = canonical_edge_insertion(g.adj, 10, v)
        options = restoring_edge_sets(g.adj, 10, v)
        assert best in options
        assert all(len(o) == len(best) for o in options)


def test_is_canonical_expansion_examples():
    c5 = cycle(5)
    s = GoodDominatingSet(c5.adj[0], 0, (), 0)
    child = expand(c5, s)
    assert is_canonical_expansion(c5, s, child, 5)
    # a kind-1 step that leaves twins elsewhere is never canonical
    six = expand(c5, GoodDominatingSet(c5.adj[0], 0, (), 0))
    for gs in enumerate_good_dominating_sets(six, kinds=[1]):
        c = expand(six, gs)
        if twin_classes(c.adj):
            assert not is_canonical_expansion(six, gs, c, 6)
    k2 = complete(2)
    p3 = expand(k2, GoodDominatingSet(mask_of([0]), 0, (), 1))
    assert is_canonical_expansion(k2, GoodDominatingSet(mask_of([0]), 0, (), 1), p3, 2)


def test_exactly_one_accepted_expansion_per_class(mtf_by_order):
    """Over all expansions of all parents, each child class is accepted exactly once."""
    for n in (7, 8, 9):
        accepted = {}
        for parent in mtf_by_order[n]:
            gens = canonical_form(parent).group_generators
            sets = enumerate_good_dominating_sets(parent)
            classes = canon.set_orbit_classes(gens, [s.set for s in sets])
            for cls in classes:
                s = sets[min(cls)]
                child = expand(parent, s)
                if is_canonical_expansion(parent, s, child, n):
                    key = canonical_form(child).key
                    assert key not in accepted
                    accepted[key] = child
        assert len(accepted) == len(mtf_by_order[n + 1])


def test_stats_merge_and_rows():
    a = GenerationStats()
    a.record(5, 0)
    b = GenerationStats()
    b.record(5, 2)
    b.record(6, 1)
    a.merge(b)
    assert a.counts == {5: [2, 1, 0, 1], 6: [1, 0, 1, 0]}
    assert a.tsv_rows()[0] == "5\t2\t1\t0\t1"


def test_parallel_matches_serial():
    serial = {canonical_form(g).key for g in mtf_graphs(12)}
    stats, lines = generate_mtf_parallel(12, 2, split_order=9)
    assert {canonical_form(graph6.decode(x)).key for x in lines} == serial
    assert (stats.total(12), *stats.by_type(12)) == COUNTS[12]
