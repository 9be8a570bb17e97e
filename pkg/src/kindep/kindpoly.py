"""k-independence polynomials: counting vertex subsets that induce no K_k."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .graph import Graph
from .polynomial import ONE, IntPolynomial

MAX_ORDER = 25
_CHUNK_BITS = 20
BITSET_MAX_ORDER = 16


@lru_cache(maxsize=None)
def _subset_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All subsets of an ``n``-set and their sizes (``n <= _CHUNK_BITS``)."""
    subsets = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        sizes += (subsets >> b) & 1
    return subsets, sizes


class SubsetBits:
    """Subsets of ``{0..n-1}`` as bit positions of one big integer.

    ``superset_bits(c)`` has bit ``S`` set iff ``c`` is a subset of ``S``, so a
    family of cliques rules out the OR of their superset masks and the
    surviving subsets of size ``j`` are ``good & size_bits[j]``.
    """

    def __init__(self, n: int):
        if n > BITSET_MAX_ORDER:
            raise ValueError(f"bit-parallel sweep limited to order "
                             f"{BITSET_MAX_ORDER}")
        self.n = n
        self.subsets, sizes = _subset_table(n)
        self.all_bits = (1 << (1 << n)) - 1
        self.size_bits = [self._pack(sizes == j) for j in range(n + 1)]
        self._cache: dict[int, int] = {}

    @staticmethod
    def _pack(flags: np.ndarray) -> int:
        return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(),
                              "little")

    def superset_bits(self, c: int) -> int:
        bits = self._cache.get(c)
        if bits is None:
            bits = self._pack((self.subsets & c) == c)
            self._cache[c] = bits
        return bits

    def count(self, cliques: Sequence[int]) -> list[int]:
        bad = 0
        sup = self.superset_bits
        for c in cliques:
            bad |= sup(c)
        good = self.all_bits & ~bad
        return [(good & b).bit_count() for b in self.size_bits]


@lru_cache(maxsize=None)
def subset_bits(n: int) -> SubsetBits:
    return SubsetBits(n)


def count_clique_free_subsets(n: int, cliques: Sequence[int]) -> list[int]:
    """``counts[j]`` = number of ``j``-subsets of ``{0..n-1}`` that contain no
    member of ``cliques`` (vertex bitsets)."""
    if n <= BITSET_MAX_ORDER:
        return subset_bits(n).count(cliques)
    return _count_chunked(n, cliques)


def _count_chunked(n: int, cliques: Sequence[int]) -> list[int]:
    # numpy sweep over the low _CHUNK_BITS vertices; for a fixed high part
    # only cliques whose high vertices lie inside it can be contained
    low_bits = min(n, _CHUNK_BITS)
    low_mask = (1 << low_bits) - 1
    subsets, sizes = _subset_table(low_bits)
    counts = [0] * (n + 1)
    for high in range(1 << (n - low_bits)):
        bad = np.zeros(len(subsets), dtype=bool)
        for c in cliques:
            if (c >> low_bits) & ~high == 0:
                c &= low_mask
                bad |= (subsets & c) == c
        chunk = np.bincount(sizes[~bad], minlength=low_bits + 1)
        base = high.bit_count()
        for j, v in enumerate(chunk.tolist()):
            counts[base + j] += v
    return counts


def k_independence_polynomial(g: Graph, k: int) -> IntPolynomial:
    """Generating polynomial of vertex subsets inducing no ``K_k``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if g.n == 0:
        return ONE
    if g.n > MAX_ORDER:
        raise ValueError(f"subset sweep limited to order {MAX_ORDER}")
    return IntPolynomial(count_clique_free_subsets(g.n, g.k_cliques(k)))


def r_value(g: Graph, k: int) -> int:
    """Largest order of an induced ``K_k``-free subgraph."""
    return k_independence_polynomial(g, k).degree


def join_clique_counts(c1: Sequence[int], c2: Sequence[int]) -> list[int]:
    """Clique counts of a join from the counts of its two sides."""
    if not c1 or not c2:
        raise ValueError("count vectors must be non-empty")
    out = [0] * (len(c1) + len(c2) - 1)
    for i, a in enumerate(c1):
        if a:
            for j, b in enumerate(c2):
                out[i + j] += a * b
    return out


def theorem5_clique_comparison(l: int, i: int) -> Fraction:
    """Ratio of ``i``-clique counts of the two comparison graphs.

    Numerator: ``i``-cliques in ``l`` independent vertices joined to
    ``K_{l(l-2)}``.  Denominator: ``i``-cliques in the complete multipartite
    graph with ``C(l,2)`` parts of size 2.
    """
    if l < 3:
        raise ValueError("l = 2 is degenerate: both comparison graphs are "
                         "2K_1 and the ratio is 0/0")
    if i < 2:
        raise ValueError("i must be at least 2")
    big = l * (l - 2)
    num = comb(big, i) + l * comb(big, i - 1)
    den = comb(comb(l, 2), i) * 2 ** i
    if den == 0:
        raise ZeroDivisionError(f"no {i}-cliques in the multipartite side "
                                f"for l={l}")
    return Fraction(num, den)


def theorem5_ratio_closed(l: int, i: int) -> Fraction:
    """Closed form of ``f(l, i+1) / f(l, i)``."""
    a = l * (l - 2)
    num = (a - i + l * (i + 1)) * (a - i + 1)
    den = (l * (l - 1) - 2 * i) * (a - i + 1 + l * i)
    return Fraction(num, den)
