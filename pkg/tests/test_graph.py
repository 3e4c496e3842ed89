from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtframsey.graph import (
    Graph,
    adds_triangle_everywhere,
    complement,
    complete,
    complete_minus,
    contains_subgraph,
    cycle,
    delta,
    disjoint_union,
    double_star,
    empty,
    induced_subgraph,
    is_mtf,
    is_triangle_free,
    mask_of,
    path,
    petersen,
    spanning_subgraph_of,
    star,
    t_plus,
)
from mtframsey.driver import candidate_graphs
from mtframsey.mtfgen import trusted_graph
from mtframsey.oracle import triangle_free_levels

from .conftest import labelled_graphs, random_graph


@st.composite
def graphs(draw, max_n: int = 9, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def naive_contains(host: Graph, pattern: Graph) -> bool:
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[a], image[b]) for a, b in pattern.edges()):
            return True
    return False


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))  # loop
    with pytest.raises(ValueError):
        Graph(2, (0b110, 0b1))  # bit beyond n
    with pytest.raises(ValueError):
        Graph(65, tuple([0] * 65))


def test_complement_examples():
    assert complement(complete(3)) == empty(3)
    c5 = cycle(5)
    assert complement(complement(c5)) == c5
    assert contains_subgraph(complement(c5), c5) and complement(c5).num_edges() == 5


def test_complement_involution_random_sample():
    rng = random.Random(1)
    for _ in range(10_000):
        n = rng.randint(1, 16)
        g = random_graph(n, rng.random(), rng)
        assert complement(complement(g)) == g


@given(graphs(max_n=16))
def test_complement_partitions_pairs(g):
    h = complement(g)
    assert g.num_edges() + h.num_edges() == g.n * (g.n - 1) // 2
    assert all(not h.has_edge(a, b) for a, b in g.edges())


def test_triangle_free_examples():
    assert is_triangle_free(cycle(5))
    assert not is_triangle_free(complete(3))
    assert is_triangle_free(petersen())


def test_mtf_examples():
    assert is_mtf(cycle(5))
    assert not is_mtf(path(4))
    assert is_mtf(petersen())
    assert is_mtf(Graph.empty(1)) and is_mtf(complete(2))
    assert not is_mtf(Graph.empty(2))


def _gray_walk(n: int):
    """Every labelled graph on n vertices as mutable rows, one edge toggle per step."""
    pairs = list(itertools.combinations(range(n), 2))
    adj = [0] * n
    yield adj
    for i in range(1, 1 << len(pairs)):
        a, b = pairs[(i & -i).bit_length() - 1]
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
        yield adj


@pytest.mark.parametrize("n", range(1, 8))
def test_mtf_definitions_agree_exhaustively(n):
    count = 0
    for adj in _gray_walk(n):
        g = trusted_graph(n, adj)
        expected = is_triangle_free(g) and adds_triangle_everywhere(g)
        assert is_mtf(g) == expected
        count += 1
    assert count == 2 ** (n * (n - 1) // 2)


def test_induced_subgraph():
    assert induced_subgraph(cycle(5), mask_of([0, 1, 2])) == path(3)
    g = petersen()
    assert induced_subgraph(g, g.full_mask) == g
    assert induced_subgraph(complete(4), mask_of([1, 2, 3])) == complete(3)
    with pytest.raises(ValueError):
        induced_subgraph(g, 0)


def test_contains_subgraph_examples():
    assert contains_subgraph(cycle(5), path(4))
    assert not contains_subgraph(cycle(5), complete(3))
    assert contains_subgraph(petersen(), cycle(5))
    assert not contains_subgraph(petersen(), cycle(4))
    assert contains_subgraph(cycle(5), Graph.empty(5))
    assert not contains_subgraph(cycle(5), Graph.empty(6))


@pytest.mark.parametrize("pn", range(1, 6))
def test_contains_subgraph_matches_naive(pn):
    rng = random.Random(pn)
    patterns = list(labelled_graphs(pn))
    for hn in range(pn, 8):
        for _ in range(150):
            host = random_graph(hn, rng.random(), rng)
            pat = rng.choice(patterns)
            assert contains_subgraph(host, pat) == naive_contains(host, pat)


def test_contains_subgraph_exhaustive_small():
    hosts = list(labelled_graphs(4))
    pats = [p for n in range(1, 5) for p in labelled_graphs(n)]
    for h in hosts:
        for p in pats:
            assert contains_subgraph(h, p) == naive_contains(h, p)


def test_spanning_subgraph_of():
    assert spanning_subgraph_of(Graph.empty(4), path(4))
    assert spanning_subgraph_of(path(3), path(3))
    assert not spanning_subgraph_of(complete(3), path(3))
    with pytest.raises(ValueError):
        spanning_subgraph_of(path(3), path(4))


def test_criteria_equivalent_on_triangle_free_graphs():
    """G in complement(M)  iff  some |V(G)|-subset of M induces a spanning subgraph of complement(G).

    Both sides are invariant under relabelling M or G, so one graph per
    isomorphism class covers every labelled case.
    """
    targets = [g for n in range(1, 6) for g in candidate_graphs(n)]
    assert len(targets) == 52
    comps = [complement(g) for g in targets]
    checked = 0
    for _, level in triangle_free_levels(8):
        for m in level:
            for g, gc in zip(targets, comps):
                lhs = contains_subgraph(complement(m), g)
                rhs = g.n <= m.n and any(
                    spanning_subgraph_of(induced_subgraph(m, mask_of(s)), gc)
                    for s in itertools.combinations(range(m.n), g.n)
                )
                assert lhs == rhs
                checked += 1
    assert checked == 582 * 52


def test_family_constructors():
    assert sorted(t_plus(2).degrees()) == [1, 1, 2, 2]
    assert contains_subgraph(t_plus(2), path(4)) and t_plus(2).num_edges() == 3
    assert delta(2) == complete(3)
    assert sorted(double_star(3, 3).degrees(), reverse=True) == [4, 4, 1, 1, 1, 1, 1, 1]
    assert star(3).degrees() == [3, 1, 1, 1]
    assert complete_minus(5, star(4)).num_edges() == 6
    u = disjoint_union(complete(3), path(2))
    assert u.n == 5 and u.num_edges() == 4 and u.has_edge(3, 4)
    with pytest.raises(ValueError):
        complete_minus(3, star(3))
    with pytest.raises(ValueError):
        star(0)


@settings(max_examples=200)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[a], perm[b]) for a, b in g.edges())
    assert is_triangle_free(h) == is_triangle_free(g)
    assert is_mtf(h) == is_mtf(g)
