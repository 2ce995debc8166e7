"""Backtracking over proper edge colorings.

Colors are handled as bits (color ``c`` is ``1 << (c - 1)``) and every vertex
keeps a mask of the colors already used on its edges.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator, Mapping

from .errors import BudgetExceeded, TooLarge
from .graph import Edge, Graph, edge_key

DEFAULT_EDGE_BOUND = 14


def _bfs_edge_order(g: Graph, edges: list[int], first: list[int]) -> list[int]:
    """Static edge order: pinned edges, then edges met in BFS from a max-degree vertex."""
    pending = set(edges) - set(first)
    order = list(first)
    if not pending:
        return order
    el = g.edge_list
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i in pending:
        u, v = el[i]
        incident[u].append(i)
        incident[v].append(i)
    seen = [False] * g.n
    while pending:
        start = max(
            (v for v in range(g.n) if not seen[v] and incident[v]),
            key=lambda v: (g.degree(v), -v),
        )
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop(0)
            for i in sorted(incident[v]):
                if i in pending:
                    pending.discard(i)
                    order.append(i)
                    w = el[i][0] if el[i][1] == v else el[i][1]
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
    return order


def iter_colorings(
    g: Graph,
    k: int,
    skip: Edge | None = None,
    fixed: Mapping[Edge, int] | None = None,
    forbid: Mapping[int, set[int] | frozenset[int]] | None = None,
    bound: int | None = DEFAULT_EDGE_BOUND,
) -> Iterator[tuple[int, ...]]:
    """Yield every proper k-coloring of ``g - skip`` as a per-edge color tuple.

    ``skip`` gets color 0. ``fixed`` pins edge colors and ``forbid`` removes
    colors from all edges at a vertex; both prune during the search. With
    ``bound`` set, more than ``bound`` unpinned edges raises ``TooLarge``.
    """
    idx = g.edge_index
    skip_i = idx[edge_key(*skip)] if skip is not None else -1
    free = [i for i in range(g.m) if i != skip_i]
    pinned: dict[int, int] = {}
    for e, c in (fixed or {}).items():
        pinned[idx[edge_key(*e)]] = c
    searched = len([i for i in free if i not in pinned])
    if bound is not None and searched > bound:
        raise TooLarge(f"{searched} unpinned edges exceed the bound {bound}")
    full = (1 << k) - 1
    vmask = [full] * g.n
    for v, cols in (forbid or {}).items():
        for c in cols:
            vmask[v] &= ~(1 << (c - 1))
    order = _bfs_edge_order(g, free, sorted(i for i in pinned if i != skip_i))
    el = g.edge_list
    eu = [el[i][0] for i in order]
    ev = [el[i][1] for i in order]
    allowed = []
    for p, i in enumerate(order):
        a = vmask[eu[p]] & vmask[ev[p]]
        if i in pinned:
            a &= 1 << (pinned[i] - 1)
        allowed.append(a)
    L = len(order)
    col = [0] * g.m
    if L == 0:
        yield tuple(col)
        return
    used = [0] * g.n
    avail = [0] * L
    cur = [0] * L
    pos = 0
    avail[0] = allowed[0]
    while pos >= 0:
        b = cur[pos]
        if b:
            used[eu[pos]] ^= b
            used[ev[pos]] ^= b
            cur[pos] = 0
        a = avail[pos]
        if not a:
            pos -= 1
            continue
        b = a & -a
        avail[pos] = a ^ b
        u, v = eu[pos], ev[pos]
        used[u] |= b
        used[v] |= b
        cur[pos] = b
        if pos + 1 == L:
            for p in range(L):
                col[order[p]] = cur[p].bit_length()
            yield tuple(col)
            continue
        pos += 1
        avail[pos] = allowed[pos] & ~(used[eu[pos]] | used[ev[pos]])


def enumerate_colorings(
    g: Graph,
    e: Edge | None,
    k: int,
    visitor: Callable[[tuple[int, ...]], bool | None],
    bound: int | None = DEFAULT_EDGE_BOUND,
    **kwargs,
) -> int:
    """Call ``visitor`` on every proper k-coloring of ``g - e``; return the count visited.

    A visitor returning ``False`` stops the enumeration early.
    """
    count = 0
    for col in iter_colorings(g, k, skip=e, bound=bound, **kwargs):
        count += 1
        if visitor(col) is False:
            break
    return count


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes: int | None):
        self.left = nodes

    def tick(self) -> None:
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("search node budget exhausted")


def find_coloring(
    g: Graph,
    k: int,
    budget: int | None = None,
    skip: Edge | None = None,
    rng: random.Random | None = None,
) -> tuple[int, ...] | None:
    """A proper k-coloring of ``g - skip`` or ``None`` if none exists.

    Dynamic most-constrained-edge ordering with forward checking. Without
    ``rng`` the edges at a max-degree vertex are pinned to distinct colors,
    which loses nothing up to palette symmetry. With ``rng`` color order is
    shuffled so repeated calls sample different colorings.
    """
    idx = g.edge_index
    skip_i = idx[edge_key(*skip)] if skip is not None else -1
    el = g.edge_list
    m = g.m
    full = (1 << k) - 1
    col = [0] * m
    used = [0] * g.n
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(el):
        if i != skip_i:
            incident[u].append(i)
            incident[v].append(i)
    uncolored = {i for i in range(m) if i != skip_i}
    if any(len(incident[v]) > k for v in range(g.n)):
        return None
    tick = _Budget(budget).tick

    def assign(i: int, b: int) -> None:
        u, v = el[i]
        col[i] = b
        used[u] |= b
        used[v] |= b
        uncolored.discard(i)

    def unassign(i: int) -> None:
        u, v = el[i]
        b = col[i]
        col[i] = 0
        used[u] ^= b
        used[v] ^= b
        uncolored.add(i)

    if rng is None and uncolored:
        hub = max(range(g.n), key=lambda v: (len(incident[v]), -v))
        for c, i in enumerate(incident[hub]):
            assign(i, 1 << c)

    def avail(i: int) -> int:
        u, v = el[i]
        return full & ~(used[u] | used[v])

    def solve() -> bool:
        tick()
        if not uncolored:
            return True
        best, best_a, best_n = -1, 0, k + 1
        for i in uncolored:
            a = avail(i)
            n = bin(a).count("1")
            if n == 0:
                return False
            if n < best_n or (n == best_n and i < best):
                best, best_a, best_n = i, a, n
                if n == 1:
                    break
        bits = []
        a = best_a
        while a:
            b = a & -a
            bits.append(b)
            a ^= b
        if rng is not None:
            rng.shuffle(bits)
        for b in bits:
            assign(best, b)
            if solve():
                return True
            unassign(best)
        return False

    if solve():
        return tuple(c.bit_length() for c in col)
    return None
