"""Invariants: exact kappa / alpha / delta against brute-force oracles."""

import itertools
import random

import pytest

from factorlab.graphs import Graph, complete, delete_vertices, disjoint_clique_union, enumerate_graphs, join
from factorlab.invariants import (
    InvariantReport,
    compute_invariants,
    connectivity_at_least,
    independence_number,
    independence_number_bruteforce,
    min_degree,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


PETERSEN = Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                      (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                      (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])


def test_min_degree_examples():
    assert min_degree(complete(5)) == 4
    assert min_degree(cycle(5)) == 2
    assert min_degree(join(complete(3), disjoint_clique_union(2, 1))) == 3
    with pytest.raises(ValueError):
        min_degree(Graph(0))


def test_connectivity_conventions():
    assert vertex_connectivity(complete(6)) == 5
    assert vertex_connectivity(Graph(1)) == 0
    assert vertex_connectivity(Graph(3, [(0, 1)])) == 0  # disconnected
    assert vertex_connectivity(Graph(2, [(0, 1)])) == 1


def test_connectivity_examples():
    assert vertex_connectivity(join(complete(3), disjoint_clique_union(2, 1))) == 3
    assert vertex_connectivity(cycle(5)) == 2


def test_petersen_connectivity():
    # independent oracle: no 2-subset separates, some 3-subset does
    assert vertex_connectivity_bruteforce(PETERSEN) == 3
    assert vertex_connectivity(PETERSEN) == 3


def test_independence_examples():
    assert independence_number(complete(7)) == 1
    assert independence_number(cycle(5)) == 2
    assert independence_number(Graph(4)) == 4
    assert independence_number(Graph(0)) == 0
    assert independence_number(PETERSEN) == 4


def test_report_asserts_kappa_le_delta():
    rep = compute_invariants(complete(4))
    assert (rep.delta, rep.kappa, rep.alpha) == (3, 3, 1)
    with pytest.raises(ValueError):
        InvariantReport(delta=1, kappa=2, alpha=1)


def test_exhaustive_small_orders_match_bruteforce():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            kappa = vertex_connectivity(g)
            assert kappa == vertex_connectivity_bruteforce(g)
            assert independence_number(g) == independence_number_bruteforce(g)
            assert kappa <= min_degree(g)
            for t in range(n + 1):
                assert connectivity_at_least(g, t) == (kappa >= t)


def test_connectivity_threshold_flow_fallback():
    # force the pair-flow path by a large subset-count budget: n=14 wheel-ish graph
    rng = random.Random(99)
    n = 14
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges |= {tuple(sorted(rng.sample(range(n), 2))) for _ in range(40)}
    g = Graph(n, [(u, v) for u, v in edges])
    kappa = vertex_connectivity(g)
    for t in (kappa - 1, kappa, kappa + 1):
        assert connectivity_at_least(g, t) == (kappa >= t)


def test_removing_vertex_drops_connectivity_by_at_most_one():
    rng = random.Random(42)
    for _ in range(150):
        n = rng.randint(2, 8)
        p = rng.random() * 0.8 + 0.1
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        kappa = vertex_connectivity(g)
        for v in range(n):
            sub, _ = delete_vertices(g, [v])
            if sub.n >= 1:
                assert vertex_connectivity(sub) >= kappa - 1


def test_join_clique_union_grid():
    for s in range(1, 5):
        for m in range(2, 5):
            for t in range(1, 4):
                g = join(complete(s), disjoint_clique_union(m, t))
                assert vertex_connectivity(g) == s
                assert independence_number(g) == m


def test_alpha_branch_and_bound_on_larger_random():
    rng = random.Random(1234)
    for _ in range(60):
        n = rng.randint(8, 12)
        p = rng.random() * 0.8 + 0.1
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        assert independence_number(g) == independence_number_bruteforce(g)
