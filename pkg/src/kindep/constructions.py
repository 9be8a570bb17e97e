"""Deterministic generators for the extremal families and witness pairs.

Wherever a family allows a free choice of edges, the choice here is the
lexicographically first one, so every generator is a pure function of its
integer parameters.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import (
    Graph,
    GraphError,
    complete_graph,
    complete_multipartite,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
)


class Family(enum.Enum):
    LEX = "lex"
    TURAN = "turan"
    THM2 = "thm2"
    THM3_LS = "thm3-ls"
    THM3_FS = "thm3-fs"
    THM4 = "thm4"
    THM5_PAIR = "thm5"
    THM6_PAIR = "thm6"
    EDGE_MOVE = "edge-move"


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    params: dict = field(default_factory=dict)

    def build(self) -> Graph | tuple[Graph, Graph]:
        return BUILDERS[self.family](**self.params)


def _pad(g: Graph, n: int) -> Graph:
    """``g`` plus isolated vertices up to order ``n``."""
    if n < g.n:
        raise GraphError(f"cannot pad order {g.n} down to {n}")
    if n == g.n:
        return g
    return disjoint_union(g, empty_graph(n - g.n))


def lex_graph(n: int, m: int) -> Graph:
    """The ``m`` lexicographically largest edges on ``v_1 > ... > v_n``.

    Vertex ``i`` plays ``v_{i+1}``, so the chosen edges are the first ``m``
    pairs ``(0,1), (0,2), ..., (1,2), ...``.
    """
    if not 0 <= m <= comb(n, 2):
        raise GraphError(f"m must be in 0..{comb(n, 2)}, got {m}")
    pairs = combinations(range(n), 2)
    return from_edges(n, [next(pairs) for _ in range(m)])


def turan_graph(n: int, k: int) -> Graph:
    """Balanced complete ``(k-1)``-partite graph on ``n`` vertices."""
    if k < 2 or n < 1:
        raise GraphError("need k >= 2 and n >= 1")
    parts = k - 1
    sizes = [n // parts + (1 if i < n % parts else 0) for i in range(parts)]
    return complete_multipartite([s for s in sizes if s])


def _two_cliques(n: int) -> Graph:
    big, small = (n + 1) // 2, n // 2
    return disjoint_union(complete_graph(big), complete_graph(small))


def theorem2_threshold(n: int) -> int:
    return comb(n, 2) - (n * n) // 4


def theorem2_graph(n: int, m: int,
                   cross_edges: list[tuple[int, int]] | None = None) -> Graph:
    """``K_ceil(n/2) u K_floor(n/2)`` plus cross edges up to ``m`` edges.

    By default the lexicographically first cross pairs are used; pass
    ``cross_edges`` to pick others (vertices ``0..ceil(n/2)-1`` form the
    larger clique).
    """
    if n < 2:
        raise GraphError("need n >= 2")
    base_m = theorem2_threshold(n)
    if not base_m <= m <= comb(n, 2):
        raise GraphError(f"m must be in {base_m}..{comb(n, 2)}, got {m}")
    big = (n + 1) // 2
    need = m - base_m
    if cross_edges is None:
        cross_edges = [(u, v) for u in range(big) for v in range(big, n)][:need]
    if len(cross_edges) != need:
        raise GraphError(f"need exactly {need} cross edges")
    for u, v in cross_edges:
        if (u < big) == (v < big):
            raise GraphError(f"{u}-{v} is not a cross pair")
    return _two_cliques(n).add_edges(cross_edges)


def theorem3_ls_size(n: int, k: int) -> int:
    return comb(n, 2) - ((n + 1) // 2) * (n // 2) - k


def theorem3_ls_graph(n: int, k: int,
                      removed: list[tuple[int, int]] | None = None) -> Graph:
    """Two near-halves cliques with ``k`` edges removed from the larger one.

    The removed edges form a star ``K_{1,k}`` when it fits in the larger
    part, otherwise a ``k``-cycle.  Either is triangle-free, so the larger
    part keeps independence number 2.  ``removed`` overrides the shape; it
    must be ``k`` triangle-free edges among vertices ``0..ceil(n/2)-1``.
    """
    if n < 2:
        raise GraphError("need n >= 2")
    if not 1 <= k <= n // 2:
        raise GraphError(f"k must be in 1..{n // 2}, got {k}")
    big = (n + 1) // 2
    if removed is None:
        if k <= big - 1:
            removed = [(0, v) for v in range(1, k + 1)]
        elif 4 <= k <= big:
            removed = [(i, (i + 1) % k) for i in range(k)]
        else:
            raise GraphError(
                f"no triangle-free set of {k} edges inside K_{big}; the "
                f"larger part would gain an independent 3-set")
    if len(removed) != k or any(max(e) >= big for e in removed):
        raise GraphError(f"need {k} edges inside the larger part")
    if from_edges(big, removed).k_cliques(3):
        raise GraphError("removed edges must be triangle-free")
    g = _two_cliques(n)
    for u, v in removed:
        g = g.delete_edge(u, v)
    return g


def theorem3_fs_graph(a: int, b: int) -> Graph:
    """``2K_a u K_b``."""
    if not a >= b >= 1:
        raise GraphError("need a >= b >= 1")
    if 2 * a + b > 62:
        raise GraphError("order too large")
    return disjoint_union(complete_graph(a), complete_graph(a),
                          complete_graph(b))


def theorem4_graph(n: int, m: int) -> Graph:
    """``m K_2 u (n - 2m) K_1``."""
    if not 0 <= 2 * m <= n:
        raise GraphError(f"need 0 <= 2m <= n, got n={n}, m={m}")
    return from_edges(n, [(2 * i, 2 * i + 1) for i in range(m)])


def theorem5_size(k: int, l: int, n: int) -> int:
    return comb(n, 2) - (k - 1) * comb(l, 2)


def theorem5_pair(k: int, l: int, n: int) -> tuple[Graph, Graph]:
    """``G`` = complement of ``(k-1) K_l`` plus isolated vertices, i.e. the
    Turan graph on ``(k-1)l`` vertices joined to a clique; ``H`` = complement
    of ``(k-1)C(l,2) K_2`` plus isolated vertices."""
    if k < 3:
        raise GraphError("need k >= 3")
    if l < 3:
        raise GraphError("l = 2 makes G and H identical; need l >= 3")
    if n <= (k - 1) * l * (l - 1):
        raise GraphError(f"need n > (k-1)l(l-1) = {(k - 1) * l * (l - 1)}")
    if n > 62:
        raise GraphError("order too large")
    cells = k - 1
    g_bar = _pad(disjoint_union(*[complete_graph(l)] * cells), n)
    pairs = cells * comb(l, 2)
    h_bar = theorem4_graph(n, pairs)
    return g_bar.complement(), h_bar.complement()


def theorem5_g_as_join(k: int, l: int, n: int) -> Graph:
    """The same ``G`` built as ``T + K_{n-(k-1)l}`` with ``T`` the Turan
    graph on ``(k-1)l`` vertices."""
    t = turan_graph((k - 1) * l, k)
    return join(t, complete_graph(n - (k - 1) * l))


def theorem6_size(k: int) -> int:
    return comb(comb(k, 2) + 2, 2) - 1


def theorem6_pair(k: int, n: int) -> tuple[Graph, Graph]:
    """``G = (K_{C(k,2)+2} - e) u isolated``; ``H = K_{C(k,2)+1} u K_k u
    isolated``."""
    if k < 3:
        raise GraphError("need k >= 3")
    c = comb(k, 2)
    if n < c + k + 1:
        raise GraphError(f"need n >= C(k,2)+k+1 = {c + k + 1}")
    if n > 62:
        raise GraphError("order too large")
    g = _pad(complete_graph(c + 2).delete_edge(0, 1), n)
    h = _pad(disjoint_union(complete_graph(c + 1), complete_graph(k)), n)
    return g, h


def edge_move(h1: Graph, edge: tuple[int, int], y: int, z: int) -> Graph:
    """Remove ``edge`` and join the two isolated vertices ``y`` and ``z``."""
    v, w = edge
    if not (0 <= v < h1.n and 0 <= w < h1.n and h1.has_edge(v, w)):
        raise GraphError(f"edge {v}-{w} is not present")
    for t in (y, z):
        if not 0 <= t < h1.n:
            raise GraphError(f"vertex {t} out of range")
        if h1.rows[t]:
            raise GraphError(f"vertex {t} is not isolated")
    if y == z:
        raise GraphError("y and z must differ")
    return h1.delete_edge(v, w).add_edge(y, z)


def lemma4_instance(g1: Graph, edge: tuple[int, int]) -> tuple[Graph, Graph]:
    """``(H1, H2)``: ``G1`` plus two isolated vertices, and the moved graph."""
    h1 = _pad(g1, g1.n + 2)
    return h1, edge_move(h1, edge, g1.n, g1.n + 1)


BUILDERS = {
    Family.LEX: lex_graph,
    Family.TURAN: turan_graph,
    Family.THM2: theorem2_graph,
    Family.THM3_LS: theorem3_ls_graph,
    Family.THM3_FS: theorem3_fs_graph,
    Family.THM4: theorem4_graph,
    Family.THM5_PAIR: theorem5_pair,
    Family.THM6_PAIR: theorem6_pair,
    Family.EDGE_MOVE: edge_move,
}
