"""Exact canonical labeling by colour refinement plus individualization.

The search tree branches on the first smallest non-singleton cell of the
equitable partition.  Vertices of that cell which are twins of an already
explored vertex are skipped: swapping two twins is an automorphism fixing
the current node, so it maps one subtree onto the other.  The canonical
form is the lexicographically smallest adjacency certificate over all
leaves.
"""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graph import Graph


def _refine(rows: tuple[int, ...], colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition finer than
    ``colors``.  Colours are renumbered ``0..c-1`` in a label-free order."""
    n = len(rows)
    ncol = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in _bits(rows[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncol:
            return new
        colors = new
        ncol = len(ranking)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _certificate(rows: tuple[int, ...], colors: list[int]) -> bytes:
    n = len(rows)
    order = sorted(range(n), key=colors.__getitem__)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = bytearray()
    for v in order:
        acc = 0
        for u in _bits(rows[v]):
            acc |= 1 << (n - 1 - pos[u])
        out += acc.to_bytes(8, "big")
    return bytes(out)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    n = g.n
    if n == 0:
        return b"\x00"
    rows = g.rows
    best: list[bytes | None] = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(rows, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            cert = _certificate(rows, colors)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        target = min((c for c in cells if len(cells[c]) > 1),
                     key=lambda c: (len(cells[c]), c))
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(rows, v, w) for w in tried):
                continue
            tried.append(v)
            new = [2 * c + 1 for c in colors]
            new[v] = 2 * target
            search(new)

    search([0] * n)
    return bytes([n]) + best[0]


def _twins(rows: tuple[int, ...], u: int, v: int) -> bool:
    mask = ~((1 << u) | (1 << v))
    return rows[u] & mask == rows[v] & mask
