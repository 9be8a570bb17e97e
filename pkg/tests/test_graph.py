from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kindep.graph import (
    NULL_GRAPH,
    DuplicateEdgeError,
    Graph,
    GraphError,
    MissingEdgeError,
    SelfLoopError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
    path_graph,
    vertex_set,
)

from conftest import graphs, nx_graph, random_graph


def test_edge_edits():
    g = empty_graph(4).add_edge(0, 1)
    assert g.m == 1 and g.has_edge(1, 0)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 0)
    with pytest.raises(SelfLoopError):
        g.add_edge(2, 2)
    with pytest.raises(MissingEdgeError):
        g.delete_edge(2, 3)
    with pytest.raises(GraphError):
        g.add_edge(0, 4)
    assert g.delete_edge(0, 1) == empty_graph(4)


def test_immutable_and_row_validation():
    g = complete_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, [0b01, 0])  # loop


def test_complement_examples():
    assert complete_graph(5).complement() == empty_graph(5)
    c5 = cycle_graph(5)
    assert c5.complement().is_isomorphic(c5)
    p4 = path_graph(4)
    assert p4.complement().is_isomorphic(p4)


def test_union_and_join():
    assert join(complete_graph(2), complete_graph(3)) == complete_graph(5)
    u = disjoint_union(complete_graph(2), complete_graph(2))
    assert u.n == 4 and u.m == 2 and len(u.components()) == 2
    assert disjoint_union() == NULL_GRAPH
    assert join(empty_graph(2), empty_graph(3)).is_isomorphic(
        complete_multipartite([2, 3]))


def test_induced_subgraph_and_neighbourhoods():
    g = path_graph(5)
    assert g.induced_subgraph(0) == NULL_GRAPH
    assert g.induced_subgraph(vertex_set([0, 2, 4])) == empty_graph(3)
    assert g.closed_neighborhood(2) == vertex_set([1, 2, 3])
    assert g.delete_vertex(2).m == 2


def test_cliques():
    k4 = complete_graph(4)
    assert k4.clique_counts() == [1, 4, 6, 4, 1]
    assert len(k4.k_cliques(3)) == 4
    assert k4.contains_k_clique(k4.full, 4)
    assert not cycle_graph(5).contains_k_clique(cycle_graph(5).full, 3)
    assert NULL_GRAPH.clique_counts() == [1]


@given(graphs(max_n=9))
def test_complement_is_involution(g):
    h = g.complement()
    assert h.complement() == g
    assert g.m + h.m == g.n * (g.n - 1) // 2


@given(graphs(max_n=9))
def test_clique_counts_against_networkx(g):
    import networkx as nx

    counts = [1, g.n] + [0] * max(0, g.n - 1)
    for c in nx.enumerate_all_cliques(nx_graph(g)):
        if len(c) >= 2:
            counts[len(c)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    mine = g.clique_counts()
    while len(mine) > 1 and mine[-1] == 0:
        mine.pop()
    assert mine == counts


@given(graphs(max_n=10))
def test_components_against_networkx(g):
    import networkx as nx

    mine = sorted(sorted(i for i in range(g.n) if c >> i & 1)
                  for c in g.components())
    theirs = sorted(sorted(c) for c in nx.connected_components(nx_graph(g)))
    assert mine == theirs


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabel(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert g.canonical_form() == h.canonical_form()
    assert g.is_isomorphic(h)


def test_canonical_form_matches_networkx_on_random_pairs():
    import networkx as nx

    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 9)
        g, h = random_graph(rng, n), random_graph(rng, n)
        expect = nx.is_isomorphic(nx_graph(g), nx_graph(h))
        assert g.is_isomorphic(h) == expect


def test_canonical_form_regular_graphs():
    # strongly symmetric graphs stress the refinement plus individualisation
    petersen = from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                          + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                          + [(i, i + 5) for i in range(5)])
    prism = from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                       + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
                       + [(i, i + 5) for i in range(5)])
    assert not petersen.is_isomorphic(prism)
    assert cycle_graph(6).is_isomorphic(cycle_graph(6).relabel([3, 1, 5, 0, 2, 4]))
    assert not cycle_graph(6).is_isomorphic(
        disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_canonical_form_fifty_relabelings():
    rng = random.Random(21)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        key = g.canonical_form()
        for _ in range(50):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert g.relabel(perm).canonical_form() == key


def test_complement_cliques_are_independent_sets_random():
    from kindep.indpoly import independence_polynomial_oracle

    rng = random.Random(8)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        counts = g.complement().clique_counts()
        assert tuple(counts[:len(counts)]) == \
            independence_polynomial_oracle(g).padded(len(counts))
