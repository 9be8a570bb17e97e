"""Independence polynomials.

``independence_polynomial`` runs the vertex recursion
``I(G) = I(G - v) + x I(G - N[v])`` on a maximum-degree vertex, factors
over connected components and memoizes component results by canonical
form.  ``independence_polynomial_oracle`` counts independent subsets
directly and is kept deliberately naive.
"""
from __future__ import annotations

import threading
from math import comb

from .graph import Graph, iter_bits
from .polynomial import ONE, X, IntPolynomial, binomial_power

ORACLE_MAX_ORDER = 25


class ComponentCache:
    """Bounded memo from canonical form to polynomial.

    The whole table is dropped when it reaches ``max_entries``; results
    never depend on a hit.
    """

    def __init__(self, max_entries: int = 1 << 20, min_order: int = 5):
        self.max_entries = max_entries
        self.min_order = min_order
        self._table: dict[bytes, IntPolynomial] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes) -> IntPolynomial | None:
        p = self._table.get(key)
        if p is None:
            self.misses += 1
        else:
            self.hits += 1
        return p

    def put(self, key: bytes, value: IntPolynomial) -> None:
        with self._lock:
            if len(self._table) >= self.max_entries:
                self._table.clear()
            self._table[key] = value

    def clear(self) -> None:
        with self._lock:
            self._table.clear()

    def __len__(self) -> int:
        return len(self._table)


default_cache = ComponentCache()


def independence_polynomial(g: Graph, cache: ComponentCache | None = None
                            ) -> IntPolynomial:
    """Exact independence polynomial of ``g``; the null graph gives 1."""
    if g.n == 0:
        return ONE
    if cache is None:
        cache = default_cache
    rows = g.rows
    local: dict[int, IntPolynomial] = {}

    def component_poly(mask: int) -> IntPolynomial:
        hit = local.get(mask)
        if hit is not None:
            return hit
        size = mask.bit_count()
        degs = [(rows[v] & mask).bit_count() for v in iter_bits(mask)]
        top = max(degs)
        if top == 0:
            result = binomial_power(size)
        elif top == size - 1 and min(degs) == size - 1:
            result = IntPolynomial((1, size))
        else:
            key = None
            if size >= cache.min_order:
                key = g.induced_subgraph(mask).canonical_form()
                result = cache.get(key)
                if result is not None:
                    local[mask] = result
                    return result
            pivot = next(v for v, d in zip(iter_bits(mask), degs) if d == top)
            without = mask & ~(1 << pivot)
            closed = mask & ~(rows[pivot] | 1 << pivot)
            result = set_poly(without) + X * set_poly(closed)
            if key is not None:
                cache.put(key, result)
        local[mask] = result
        return result

    def set_poly(mask: int) -> IntPolynomial:
        if mask == 0:
            return ONE
        result = ONE
        for comp in g.components(mask):
            result = result * component_poly(comp)
        return result

    return set_poly(g.full)


def independence_polynomial_oracle(g: Graph) -> IntPolynomial:
    """Count independent sets of every size by sweeping all vertex subsets."""
    n = g.n
    if n == 0:
        return ONE
    if n > ORACLE_MAX_ORDER:
        raise ValueError(f"oracle limited to order {ORACLE_MAX_ORDER}")
    rows = g.rows
    counts = [0] * (n + 1)
    for s in range(1 << n):
        independent = True
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if rows[v] & s:
                independent = False
                break
            rest ^= low
        if independent:
            counts[s.bit_count()] += 1
    return IntPolynomial(counts)


def lex_decomposition(n: int, m: int) -> tuple[int, int]:
    """``(l, j)`` with ``m = (n-1) + (n-2) + ... + (n-l) + j`` and
    ``0 <= j <= n-l-2``, for ``m < C(n, 2)``."""
    if not 0 <= m < comb(n, 2):
        raise ValueError(f"m must be in 0..C(n,2)-1, got {m}")
    ell, rest = 0, m
    while rest >= n - 1 - ell:
        rest -= n - 1 - ell
        ell += 1
    return ell, rest


def lex_polynomial_closed(n: int, m: int) -> IntPolynomial:
    """Independence polynomial of the lex graph in closed form.

    With ``(l, j) = lex_decomposition(n, m)`` and ``v`` the vertex of degree
    ``j + l``, ``G - v`` is ``K_l`` joined to ``n-l-1`` independent vertices
    and ``G - N[v]`` is ``n-l-j-1`` isolated vertices, so::

        I = l*x + (1+x)**(n-l-j-1) * ((1+x)**j + x)
    """
    _check_nm(n, m)
    if m == comb(n, 2):
        return IntPolynomial((1, n))
    ell, j = lex_decomposition(n, m)
    return (IntPolynomial((0, ell))
            + binomial_power(n - ell - j - 1) * (binomial_power(j) + X))


def lex_polynomial_displayed(n: int, m: int) -> IntPolynomial:
    """``(1 + l*x)(1+x)**(n-l-j-1)((1+x)**j + x)``.

    This product treats the ``l`` dominating vertices as a disjoint ``K_l``.
    It agrees with the lex graph only when ``l == 0`` (or ``m = C(n,2)``),
    and is kept to report that mismatch.
    """
    _check_nm(n, m)
    if m == comb(n, 2):
        return IntPolynomial((1, n))
    ell, j = lex_decomposition(n, m)
    return (IntPolynomial((1, ell)) * binomial_power(n - ell - j - 1)
            * (binomial_power(j) + X))


def _check_nm(n: int, m: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"m must be in 0..{comb(n, 2)}, got {m}")
