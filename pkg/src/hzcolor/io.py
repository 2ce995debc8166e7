"""Text formats: edge lists, graph6 streams and coloring files."""

from __future__ import annotations

import logging
from typing import Iterable, Iterator

from .coloring import PartialColoring
from .errors import DuplicateEdge, ParseError, SelfLoop
from .graph import Graph, edge_key

log = logging.getLogger(__name__)


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    lines = _data_lines(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise ParseError("empty edge list") from None
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative size in header", lineno)
    edges: set[tuple[int, int]] = set()
    count = 0
    for lineno, parts in lines:
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop at {u}", lineno)
        e = edge_key(u, v)
        if e in edges:
            raise DuplicateEdge(f"duplicate edge {e}", lineno)
        edges.add(e)
        count += 1
    if count != m:
        raise ParseError(f"header announces {m} edges, found {count}")
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    return f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in g.edge_list)


def _decode_n(data: bytes, lineno: int | None) -> tuple[int, int]:
    if not data:
        raise ParseError("missing vertex count", lineno)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated vertex count", lineno)
        chunks, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise ParseError("truncated vertex count", lineno)
        chunks, start = data[1:4], 4
    n = 0
    for ch in chunks:
        n = (n << 6) | (ch - 63)
    return n, start


def parse_graph6(line: bytes | str, lineno: int | None = None) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if any(not 63 <= ch <= 126 for ch in data):
        raise ParseError("byte outside the graph6 range", lineno)
    n, pos = _decode_n(data, lineno)
    body = data[pos:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", lineno)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    return Graph(n, frozenset(edges))


def parse_graph6_stream(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Decode one graph per non-empty line; blank lines are skipped with a warning."""
    for lineno, line in enumerate(lines, start=1):
        raw = line.strip()
        if not raw:
            log.warning("graph6 line %d is empty; skipped", lineno)
            continue
        yield parse_graph6(raw, lineno)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(sum(b << (5 - t) for t, b in enumerate(bits[p : p + 6])) + 63) for p in range(0, len(bits), 6)
    )
    return head + body


def parse_coloring(text: str, g: Graph, k: int | None = None) -> PartialColoring:
    """Parse lines ``u v c`` (``c`` = ``-`` marks the single uncolored edge)."""
    colors: dict[tuple[int, int], int] = {}
    uncolored = None
    for lineno, parts in _data_lines(text):
        if len(parts) != 3:
            raise ParseError("coloring line must be 'u v c'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("endpoints must be integers", lineno) from None
        if not g.has_edge(u, v):
            raise ParseError(f"{(u, v)} is not an edge of the graph", lineno)
        e = edge_key(u, v)
        if e in colors or e == uncolored:
            raise DuplicateEdge(f"edge {e} listed twice", lineno)
        if parts[2] == "-":
            if uncolored is not None:
                raise ParseError("more than one uncolored edge", lineno)
            uncolored = e
            continue
        try:
            c = int(parts[2])
        except ValueError:
            raise ParseError("color must be an integer or '-'", lineno) from None
        if c < 1:
            raise ParseError("colors start at 1", lineno)
        colors[e] = c
    missing = set(g.edges) - set(colors) - ({uncolored} if uncolored else set())
    if missing:
        raise ParseError(f"edges without a color entry: {sorted(missing)[:4]}")
    if k is None:
        k = max(colors.values(), default=0)
    try:
        return PartialColoring(g, k, colors, uncolored)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_coloring(c: PartialColoring) -> str:
    out = []
    for (u, v), col in zip(c.graph.edge_list, c.colors()):
        out.append(f"{u} {v} {col if col else '-'}\n")
    return "".join(out)
