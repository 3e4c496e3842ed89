from __future__ import annotations

import random

import pytest

from mtframsey.driver import candidate_graphs, components, ramsey_number
from mtframsey.family import parse_graph
from mtframsey.graph import (
    Graph,
    complement,
    complete,
    complete_minus,
    contains_subgraph,
    cycle,
    delta,
    disjoint_union,
    double_star,
    is_triangle_free,
    star,
    t_plus,
)
from mtframsey.mtfgen import mtf_graphs
from mtframsey.oracle import brute_ramsey_number
from mtframsey.theory import (
    COROLLARY_AXIOMS,
    InsufficientAxioms,
    KnownValues,
    corollary_table,
    derive_bounds,
    disconnected_union_rule,
    doublestar_m,
    lemma1_hypothesis,
    monotone_lower_bound,
    prop_delta_implication,
    prop_doublestar_bound,
    prop_tplus_bound,
    prop_two_stars_hypothesis,
    tplus_conditions,
)


def test_star_lemma_hypothesis():
    assert lemma1_hypothesis(36, 10, 2)
    assert not lemma1_hypothesis(34, 10, 2)
    assert not any(lemma1_hypothesis(10, 10, s) for s in range(1, 10))
    for bad in (0, 10):
        with pytest.raises(ValueError):
            lemma1_hypothesis(36, 10, bad)


def test_tplus_bound():
    known = {"K9-e": 31}
    assert prop_tplus_bound(10, 3, known) == 31
    assert prop_tplus_bound(10, 8, known) == 31
    assert tplus_conditions(31, 10, 3, 31)
    assert not tplus_conditions(30, 10, 3, 31)
    with pytest.raises(ValueError):
        prop_tplus_bound(10, 0, known)
    with pytest.raises(InsufficientAxioms):
        prop_tplus_bound(10, 3, {"K9": 36})


def test_tplus_bound_is_smallest():
    # s=1 needs (r-9) > 56 and (r-10)*2 > 72, so r = 66
    assert prop_tplus_bound(10, 1, {"K9-e": 31}) == 66
    assert not tplus_conditions(65, 10, 1, 31)


def test_delta_implication_arithmetic():
    assert prop_delta_implication(36, 10, 2)
    assert not prop_delta_implication(30, 10, 2)


def _random_triangle_free(n: int, rng: random.Random) -> Graph:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    stop = rng.randrange(len(pairs) // 3, len(pairs) + 1)
    for a, b in pairs[:stop]:
        if not adj[a] & adj[b]:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return Graph(n, tuple(adj))


def test_delta_implication_on_concrete_graphs():
    r, n, s = 14, 5, 2
    assert prop_delta_implication(r, n, s)
    k_delta = complete_minus(n, delta(s + 1))
    k_tplus = complete_minus(n, t_plus(s))
    rng = random.Random(14)
    hits = 0
    while hits < 50:
        m = _random_triangle_free(r, rng)
        assert is_triangle_free(m)
        mc = complement(m)
        if contains_subgraph(mc, k_delta):
            assert contains_subgraph(mc, k_tplus)
            hits += 1


def test_star_lemma_on_mtf_graphs_of_order_14():
    r, n, s = 14, 5, 2
    assert lemma1_hypothesis(r, n, s)
    target = complete_minus(n, star(s))
    graphs = mtf_graphs(14)
    assert len(graphs) == 1274
    premise = 0
    for m in graphs:
        mc = complement(m)
        if contains_subgraph(mc, complete(n - 1)):
            premise += 1
            assert contains_subgraph(mc, target)
    assert premise > 0


def test_doublestar_bound():
    assert prop_doublestar_bound(8, {"K8": 28}) == 28
    assert prop_doublestar_bound(4, {"K4": 9}) == 16
    assert doublestar_m(8) == 3 and doublestar_m(4) == 1
    with pytest.raises(InsufficientAxioms):
        prop_doublestar_bound(8, {})


def test_doublestar_bound_against_engine():
    g = complete_minus(6, double_star(1, 1))
    assert ramsey_number(g).value <= prop_doublestar_bound(4, {"K4": 9})


def test_two_stars_hypothesis():
    assert prop_two_stars_hypothesis(31, 10, 3, 1)
    assert not prop_two_stars_hypothesis(31, 10, 1, 3)
    assert not prop_two_stars_hypothesis(31, 10, 8, 1)
    assert not prop_two_stars_hypothesis(30, 10, 3, 1)


def test_monotone_lower_bound():
    assert monotone_lower_bound(parse_graph("K10-K1,2"), {"K9": 36}) == 36
    assert monotone_lower_bound(parse_graph("K10-D3,3"), {"K8": 28}) == 28
    assert monotone_lower_bound(cycle(5), {"K3": 6}) == 1


def test_union_rule_examples():
    known = {"K4": 9, "K2": 3}
    assert disconnected_union_rule(complete(4), complete(2), known) == 9
    assert disconnected_union_rule(complete(2), complete(4), known) == 9
    assert disconnected_union_rule(complete(3), complete(3), {"K3": 6}) is None
    with pytest.raises(InsufficientAxioms):
        disconnected_union_rule(complete(4), complete(3), known)
    by_graph = {complete(4): 9, Graph.empty(1): 1}
    assert disconnected_union_rule(complete(4), Graph.empty(1), by_graph) == 9


def test_union_rule_against_oracle():
    u = disjoint_union(complete(4), complete(2))
    assert brute_ramsey_number(u) == 9


def test_union_rule_agrees_with_engine():
    cache: dict = {}

    def value(g):
        key = (g.n, g.adj)
        if key not in cache:
            cache[key] = ramsey_number(g).value
        return cache[key]

    applied = 0
    for n in range(2, 6):
        for g in candidate_graphs(n, connected=False):
            parts = components(g)
            g1 = parts[0]
            g2 = parts[1]
            for p in parts[2:]:
                g2 = disjoint_union(g2, p)
            predicted = disconnected_union_rule(g1, g2, {g1: value(g1), g2: value(g2)})
            if predicted is not None:
                assert predicted == value(g)
                applied += 1
    assert applied > 0


def test_known_values_lookup(tmp_path):
    path = tmp_path / "known.tsv"
    path.write_text("# name\tvalue\nK9\t36\nK9-e\t31\n")
    kv = KnownValues.from_tsv(path)
    assert len(kv) == 2
    assert kv.require("K9") == 36
    # lookup is up to isomorphism
    assert kv.get(parse_graph("K9-e").relabel(list(reversed(range(9))))) == ("K9-e", 31)
    with pytest.raises(InsufficientAxioms) as exc:
        kv.require("K8")
    assert "insufficient axioms" in str(exc.value)


def test_corollary_table():
    rows = corollary_table()
    values = {d.spec: d.exact for d in rows}
    for s in range(2, 10):
        assert values[f"K10-K1,{s}"] == 36
    for s in range(3, 9):
        assert values[f"K10-T{s}+"] == 31
        assert values[f"K10-Delta{s + 1}"] == 31
    for s in range(3, 8):
        assert values[f"K10-K1,{s}-e"] == 31
    assert values["K10-D3,3"] == 28


def test_derivation_logs_name_the_bound():
    d = derive_bounds("K10-K1,2", COROLLARY_AXIOMS)
    assert d.summary() == "upper=36 via star-lemma+R(K3,K9); lower=36 via K9 in G; exact=36"
    assert any(line.startswith("star-lemma\t") for line in d.log)
    d = derive_bounds("K10-T3+", COROLLARY_AXIOMS)
    assert d.upper_via.startswith("tplus-bound") and d.exact == 31
    d = derive_bounds("K10-Delta4", COROLLARY_AXIOMS)
    assert d.upper_via.startswith("tplus-bound") and d.exact == 31
    assert any(line.startswith("delta-implication\t") for line in d.log)
    d = derive_bounds("K10-D3,3", COROLLARY_AXIOMS)
    assert d.upper_via.startswith("doublestar-bound") and d.exact == 28
    d = derive_bounds("K10-K1,3-e", COROLLARY_AXIOMS)
    assert d.upper_via.startswith("two-stars") and d.exact == 31


def test_s8_two_stars_case_is_flagged():
    d = derive_bounds("K10-K1,8-e", COROLLARY_AXIOMS)
    assert d.upper is None
    assert any("not derivable from the two-stars bound alone" in f for f in d.flags)


def test_missing_axioms():
    with pytest.raises(InsufficientAxioms):
        derive_bounds("K10-K1,2", {"K8": 28})
    with pytest.raises(InsufficientAxioms):
        derive_bounds("K10-T3+", {"K9": 36})


def test_inconsistent_axioms_rejected():
    with pytest.raises(ValueError):
        derive_bounds("K10-K1,2", {"K9": 36, "K10-K1,2": 20})
