"""Simple graphs on at most 62 vertices stored as adjacency bitsets.

A :class:`Graph` is immutable.  Vertex ``v``'s neighbourhood is the integer
``rows[v]`` whose bit ``u`` is set when ``uv`` is an edge.  Vertex sets are
plain ints used as bitsets.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph operation."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class Graph:
    """Undirected simple graph with bitset adjacency rows.

    The order-0 graph is only reachable through :data:`NULL_GRAPH`, which is
    what vertex deletions return once nothing is left.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if rows is None:
            rows = (0,) * n
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        _check_rows(n, rows)
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def _unchecked(cls, n: int, rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._hash = None
        return g

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def full(self) -> int:
        """Bitset of all vertices."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, r in enumerate(self.rows):
            r >>= u + 1
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def is_null(self) -> bool:
        return self.n == 0

    # -- value semantics -----------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        if self.n == 0:
            return "NULL_GRAPH"
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "rows"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    # -- edits ---------------------------------------------------------
    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"edge {u}-{v} already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def delete_edge(self, u: int, v: int) -> Graph:
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge {u}-{v} not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        g = self
        for u, v in edges:
            g = g.add_edge(u, v)
        return g

    def complement(self) -> Graph:
        full = self.full
        rows = tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows))
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph where old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of the vertex range")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            pv = perm[v]
            acc = 0
            for u in iter_bits(r):
                acc |= 1 << perm[u]
            rows[pv] = acc
        return Graph(self.n, rows)

    # -- neighbourhoods and subgraphs ----------------------------------
    def closed_neighborhood(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v] | 1 << v

    def induced_subgraph(self, vertex_set: int) -> Graph:
        """Subgraph induced on ``vertex_set`` with vertices renumbered in
        increasing order.  The empty set gives :data:`NULL_GRAPH`."""
        if vertex_set >> self.n:
            raise GraphError("vertex set exceeds the vertex range")
        verts = list(iter_bits(vertex_set))
        if not verts:
            return NULL_GRAPH
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            acc = 0
            for u in iter_bits(self.rows[v] & vertex_set):
                acc |= 1 << index[u]
            rows.append(acc)
        return Graph._unchecked(len(verts), tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)
        return self.induced_subgraph(self.full & ~(1 << v))

    def components(self, vertex_set: int | None = None) -> list[int]:
        """Connected components of ``G[vertex_set]`` as bitsets, ordered by
        lowest vertex."""
        rest = self.full if vertex_set is None else vertex_set
        out = []
        rows = self.rows
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= rows[u]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            out.append(comp)
            rest &= ~comp
        return out

    # -- cliques -------------------------------------------------------
    def contains_k_clique(self, vertex_set: int, k: int) -> bool:
        if k < 1:
            raise GraphError("clique order must be at least 1")
        if vertex_set.bit_count() < k:
            return False
        rows = self.rows

        def extend(cand: int, need: int) -> bool:
            if need == 0:
                return True
            while cand.bit_count() >= need:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                if extend(cand & rows[v], need - 1):
                    return True
            return False

        return extend(vertex_set, k)

    def k_cliques(self, k: int) -> list[int]:
        """All complete subgraphs of order ``k`` as vertex bitsets."""
        if k < 1:
            raise GraphError("clique order must be at least 1")
        return cliques_of_rows(self.rows, self.full, k)

    def clique_counts(self) -> list[int]:
        """``counts[t]`` is the number of complete subgraphs of order ``t``,
        for ``t = 0..n``."""
        counts = [0] * (self.n + 1)
        rows = self.rows

        def extend(size: int, cand: int) -> None:
            counts[size] += 1
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                extend(size + 1, cand & rows[v])

        extend(0, self.full)
        return counts

    # -- isomorphism ---------------------------------------------------
    def canonical_form(self) -> bytes:
        from .canon import canonical_form

        return canonical_form(self)

    def is_isomorphic(self, other: Graph) -> bool:
        if self.n != other.n or self.m != other.m:
            return False
        if sorted(self.degrees()) != sorted(other.degrees()):
            return False
        return self.canonical_form() == other.canonical_form()


NULL_GRAPH = Graph._unchecked(0, ())


def cliques_of_rows(rows: Sequence[int], cand: int, k: int) -> list[int]:
    """Order-``k`` cliques inside ``cand`` for raw adjacency rows."""
    out: list[int] = []

    def extend(clique: int, cand: int, need: int) -> None:
        if need == 1:
            while cand:
                low = cand & -cand
                out.append(clique | low)
                cand ^= low
            return
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            extend(clique | low, cand & rows[low.bit_length() - 1], need - 1)

    if k == 0:
        return [0]
    extend(0, cand, k)
    return out


def _check_rows(n: int, rows: tuple[int, ...]) -> None:
    limit = 1 << n
    for v, r in enumerate(rows):
        if r < 0 or r >= limit:
            raise GraphError(f"row {v} has bits outside the vertex range")
        if r >> v & 1:
            raise SelfLoopError(f"self-loop at vertex {v}")
        for u in iter_bits(r):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {v} and {u}")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(vertices: Iterable[int]) -> int:
    acc = 0
    for v in vertices:
        acc |= 1 << v
    return acc


# -- constructors ------------------------------------------------------
def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for order {n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge {u}-{v} listed twice")
        seen.add(key)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph(n, rows)


def disjoint_union(*graphs: Graph) -> Graph:
    """Block-diagonal union; null graphs are ignored."""
    parts = [g for g in graphs if g.n]
    n = sum(g.n for g in parts)
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    if n == 0:
        return NULL_GRAPH
    rows: list[int] = []
    shift = 0
    for g in parts:
        rows.extend(r << shift for r in g.rows)
        shift += g.n
    return Graph(n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(g, h)
    if u.n == 0:
        return u
    left = (1 << g.n) - 1
    right = u.full & ~left
    rows = [r | right if v < g.n else r | left for v, r in enumerate(u.rows)]
    return Graph(u.n, rows)


def labeled_edge_pairs(n: int) -> list[tuple[int, int]]:
    """Pairs of ``K_n`` in lexicographic order."""
    return list(combinations(range(n), 2))


def max_edges(n: int) -> int:
    return comb(n, 2)
