"""graph6 and plain edge-list text formats."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph, GraphError, from_edges

HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph text.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise FormatError(f"graph6 character out of range in {s!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise FormatError(f"orders above {MAX_ORDER} are not supported")
    if n == 0:
        raise FormatError("order-0 graphs are not representable")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    data = s[1:]
    if len(data) != want:
        raise FormatError(
            f"order {n} needs {want} data characters, got {len(data)}")
    value = 0
    for ch in data:
        value = value << 6 | (ord(ch) - 63)
    pad = 6 * want - nbits
    if value & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    value >>= pad
    edges = []
    bit = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> bit & 1:
                edges.append((i, j))
            bit -= 1
    return from_edges(n, edges)


def graph6_encode(g: Graph, header: bool = False) -> str:
    if g.n == 0:
        raise GraphError("the null graph has no graph6 encoding")
    n = g.n
    value = 0
    nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            value = value << 1 | (row >> i & 1)
            nbits += 1
    nchars = (nbits + 5) // 6
    value <<= 6 * nchars - nbits
    chars = [chr(63 + (value >> (6 * (nchars - 1 - c)) & 63))
             for c in range(nchars)]
    return (HEADER if header else "") + chr(63 + n) + "".join(chars)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield graph6_decode(line)
        except (FormatError, GraphError) as exc:
            raise FormatError(str(exc), lineno) from exc


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6_lines(fh))


def edgelist_decode(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1)]
    rows = [(i, parts) for i, parts in rows
            if parts and not parts[0].startswith("#")]
    if not rows:
        raise FormatError("empty edge list")
    head_line, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise FormatError("header must be two integers 'n m'", head_line)
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise FormatError("edge line must hold two integers", lineno)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError("edge line must hold two integers", lineno)
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}",
                          head_line)
    try:
        return from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def edgelist_encode(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
