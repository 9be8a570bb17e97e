from __future__ import annotations

import random
from itertools import combinations

from hypothesis import settings
from hypothesis import strategies as st

from kindep.graph import Graph, from_edges

# sympy and networkx oracles are slow per call; fixed seed keeps runs stable
settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")


def nx_graph(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edges(n, [e for e in combinations(range(n), 2)
                          if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs),
                           max_size=len(pairs)))
    return from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def permuted(draw, g: Graph) -> Graph:
    return g.relabel(draw(st.permutations(range(g.n))))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
