"""Partial edge colorings, bicolored chains and the recoloring operations on them.

A :class:`PartialColoring` assigns colors ``1..k`` to edges; color ``0`` means
uncolored. One edge may be designated as *the* uncolored edge of a
coloring-triple. Every mutating operation checks properness unless it runs in
deferred mode inside an operation script.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    AmbiguousMissing,
    ImproperResult,
    MismatchedBase,
    PrecedenceViolation,
    ScriptError,
    StaleChain,
)
from .graph import Edge, Graph, edge_key

# Full recompute of the per-vertex index after every mutation.
DEBUG = bool(os.environ.get("HZCOLOR_DEBUG"))


class PartialColoring:
    __slots__ = ("graph", "k", "uncolored_edge", "_col", "_at")

    def __init__(
        self,
        graph: Graph,
        k: int,
        colors: Mapping[Edge, int] | Sequence[int] | None = None,
        uncolored_edge: Edge | None = None,
    ):
        self.graph = graph
        self.k = k
        self.uncolored_edge = edge_key(*uncolored_edge) if uncolored_edge else None
        if colors is None:
            col = [0] * graph.m
        elif isinstance(colors, Mapping):
            col = [0] * graph.m
            idx = graph.edge_index
            for (u, v), c in colors.items():
                col[idx[edge_key(u, v)]] = c
        else:
            col = list(colors)
            if len(col) != graph.m:
                raise ValueError("color sequence length must equal edge count")
        for c in col:
            if not 0 <= c <= k:
                raise ValueError(f"color {c} outside [0, {k}]")
        self._col = col
        self._rebuild()

    def _rebuild(self) -> None:
        at: list[dict[int, list[int]]] = [{} for _ in range(self.graph.n)]
        for (u, v), c in zip(self.graph.edge_list, self._col):
            if c:
                at[u].setdefault(c, []).append(v)
                at[v].setdefault(c, []).append(u)
        self._at = at

    def audit(self) -> None:
        """Recompute the vertex index from scratch and compare with the incremental one."""
        inc = [{c: sorted(ws) for c, ws in d.items()} for d in self._at]
        self._rebuild()
        full = [{c: sorted(ws) for c, ws in d.items()} for d in self._at]
        if inc != full:
            raise AssertionError("incremental missing-set index diverged")

    def copy(self) -> "PartialColoring":
        new = PartialColoring.__new__(PartialColoring)
        new.graph = self.graph
        new.k = self.k
        new.uncolored_edge = self.uncolored_edge
        new._col = list(self._col)
        new._at = [{c: list(ws) for c, ws in d.items()} for d in self._at]
        return new

    # -- queries --------------------------------------------------------

    def color(self, u: int, v: int) -> int:
        """Color of edge ``uv``; 0 if uncolored."""
        return self._col[self.graph.edge_index[edge_key(u, v)]]

    def colors(self) -> tuple[int, ...]:
        return tuple(self._col)

    def as_dict(self) -> dict[Edge, int]:
        return {e: c for e, c in zip(self.graph.edge_list, self._col) if c}

    def present(self, v: int) -> frozenset[int]:
        return frozenset(self._at[v])

    def missing(self, v: int) -> frozenset[int]:
        at = self._at[v]
        return frozenset(c for c in range(1, self.k + 1) if c not in at)

    def neighbor_via(self, v: int, c: int) -> int | None:
        ws = self._at[v].get(c)
        if not ws:
            return None
        if len(ws) > 1:
            raise ImproperResult(f"vertex {v} sees color {c} on {len(ws)} edges")
        return ws[0]

    def uncolored_edges(self) -> list[Edge]:
        return [e for e, c in zip(self.graph.edge_list, self._col) if not c]

    def colored_edge_count(self) -> int:
        return sum(1 for c in self._col if c)

    def is_proper(self) -> bool:
        return all(len(ws) == 1 for d in self._at for ws in d.values())

    def conflicts(self) -> list[tuple[int, int]]:
        return [(v, c) for v, d in enumerate(self._at) for c, ws in d.items() if len(ws) > 1]

    def check(self) -> None:
        """Raise unless this is a proper coloring with at most the designated edge uncolored."""
        bad = self.conflicts()
        if bad:
            raise ImproperResult(f"color clashes at (vertex, color) {bad[:4]}")
        for e in self.uncolored_edges():
            if e != self.uncolored_edge:
                raise ImproperResult(f"edge {e} is uncolored")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.k == other.k
            and self.uncolored_edge == other.uncolored_edge
            and self._col == other._col
        )

    def __hash__(self) -> int:
        return hash((self.k, self.uncolored_edge, tuple(self._col)))

    def __repr__(self) -> str:
        return f"PartialColoring(k={self.k}, uncolored={self.uncolored_edge}, {self.as_dict()})"

    # -- low level mutation ----------------------------------------------

    def set_color(self, u: int, v: int, c: int) -> None:
        """Assign color ``c`` (0 = uncolor) to edge ``uv`` without any check."""
        if not 0 <= c <= self.k:
            raise ValueError(f"color {c} outside [0, {self.k}]")
        i = self.graph.edge_index[edge_key(u, v)]
        old = self._col[i]
        if old == c:
            return
        if old:
            self._detach(u, v, old)
        self._col[i] = c
        if c:
            self._at[u].setdefault(c, []).append(v)
            self._at[v].setdefault(c, []).append(u)
        if DEBUG:
            self.audit()

    def _detach(self, u: int, v: int, c: int) -> None:
        for a, b in ((u, v), (v, u)):
            ws = self._at[a][c]
            ws.remove(b)
            if not ws:
                del self._at[a][c]

    def relabel_colors(self, perm: Mapping[int, int]) -> "PartialColoring":
        """Apply a palette permutation (colors absent from ``perm`` are fixed)."""
        cols = [perm.get(c, c) if c else 0 for c in self._col]
        return PartialColoring(self.graph, self.k, cols, self.uncolored_edge)


def missing_colors(c: PartialColoring, v: int) -> frozenset[int]:
    return c.missing(v)


def is_elementary(c: PartialColoring, vertices: Iterable[int]) -> bool:
    seen: set[int] = set()
    for v in set(vertices):
        m = c.missing(v)
        if seen & m:
            return False
        seen |= m
    return True


@dataclass(frozen=True)
class Chain:
    """A maximal (a, b)-bicolored component, or a segment of one.

    For paths ``vertices`` runs from one end to the other and ``edges[i]``
    joins ``vertices[i]`` and ``vertices[i+1]``. For cycles the first vertex is
    repeated at the end.
    """

    colors: tuple[int, int]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    edge_colors: tuple[int, ...]
    kind: str  # "path" or "cycle"
    segment: bool = False

    @property
    def is_path(self) -> bool:
        return self.kind == "path"

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"

    @property
    def endpoints(self) -> tuple[int, int] | None:
        if not self.is_path:
            return None
        return self.vertices[0], self.vertices[-1]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __contains__(self, v: object) -> bool:
        return v in self.vertex_set

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def same_component(self, other: "Chain") -> bool:
        return set(self.colors) == set(other.colors) and self.edge_set == other.edge_set and (
            self.vertex_set == other.vertex_set
        )

    def oriented_from(self, x: int) -> "Chain":
        """The same path read starting at endpoint ``x``."""
        if not self.is_path or x not in (self.vertices[0], self.vertices[-1]):
            raise ValueError(f"{x} is not an endpoint of this chain")
        if self.vertices[0] == x:
            return self
        return Chain(
            self.colors,
            self.vertices[::-1],
            self.edges[::-1],
            self.edge_colors[::-1],
            self.kind,
            self.segment,
        )

    def meets_before(self, start: int, u: int, v: int) -> bool:
        """Whether the path read from endpoint ``start`` reaches ``u`` before ``v``."""
        seq = self.oriented_from(start).vertices
        return seq.index(u) < seq.index(v)

    def subchain(self, x: int, y: int) -> "Chain":
        """``P_[x,y]``: the segment of this path with ends ``x`` and ``y``."""
        if not self.is_path:
            raise ValueError("subchains are defined on paths only")
        i, j = self.vertices.index(x), self.vertices.index(y)
        if i > j:
            return self.oriented_from(self.vertices[-1]).subchain(x, y)
        return Chain(
            self.colors,
            self.vertices[i : j + 1],
            self.edges[i:j],
            self.edge_colors[i:j],
            "path",
            segment=(i, j) != (0, len(self.vertices) - 1) or self.segment,
        )


def _walk(c: PartialColoring, a: int, b: int, x: int, first: int):
    verts: list[int] = []
    edges: list[Edge] = []
    cols: list[int] = []
    cur, col = x, first
    while True:
        nxt = c.neighbor_via(cur, col)
        if nxt is None:
            return verts, edges, cols, False
        edges.append(edge_key(cur, nxt))
        cols.append(col)
        verts.append(nxt)
        if nxt == x:
            return verts, edges, cols, True
        cur = nxt
        col = b if col == a else a


def chain_through(c: PartialColoring, a: int, b: int, x: int) -> Chain:
    """The (a, b)-chain containing ``x``.

    If ``x`` is an end of the chain the vertex sequence starts at ``x``. When
    ``x`` is interior the sequence starts at the end reached through ``x``'s
    ``b``-edge. ``a == b`` yields the single-vertex chain.
    """
    if a == b:
        return Chain((a, b), (x,), (), (), "path")
    fa = c.neighbor_via(x, a) is not None
    fb = c.neighbor_via(x, b) is not None
    if not fa and not fb:
        return Chain((a, b), (x,), (), (), "path")
    first = a if fa else b
    fv, fe, fc, closed = _walk(c, a, b, x, first)
    if closed:
        return Chain((a, b), (x, *fv), tuple(fe), tuple(fc), "cycle")
    if not (fa and fb):
        return Chain((a, b), (x, *fv), tuple(fe), tuple(fc), "path")
    bv, be, bc, _ = _walk(c, a, b, x, b)
    verts = tuple(reversed(bv)) + (x,) + tuple(fv)
    edges = tuple(reversed(be)) + tuple(fe)
    cols = tuple(reversed(bc)) + tuple(fc)
    return Chain((a, b), verts, edges, cols, "path")


def are_linked(c: PartialColoring, a: int, b: int, x: int, y: int) -> bool:
    if x == y:
        return True
    return y in chain_through(c, a, b, x)


def anchored_chain(c: PartialColoring, a: int, b: int, x: int) -> Chain:
    """``P_x(a, b)``: the chain with ``x`` as an end, read from ``x``.

    Raises ``ValueError`` when ``x`` is interior to its chain.
    """
    ch = chain_through(c, a, b, x)
    if ch.is_cycle or ch.vertices[0] != x:
        raise ValueError(f"{x} is not an end of its ({a},{b})-chain")
    return ch


def _validate_chain(c: PartialColoring, chain: Chain) -> None:
    a, b = chain.colors
    for e, col in zip(chain.edges, chain.edge_colors):
        if c.color(*e) != col:
            raise StaleChain(f"edge {e} no longer has color {col}")
    if chain.is_path and not chain.segment and a != b:
        for end in set(chain.endpoints):
            inside = {w for e in chain.edges if end in e for w in e if w != end}
            for col in (a, b):
                w = c.neighbor_via(end, col)
                if w is not None and w not in inside:
                    raise StaleChain(f"chain is no longer maximal at {end}")


def _swap_in_place(c: PartialColoring, chain: Chain) -> None:
    a, b = chain.colors
    if a == b or not chain.edges:
        return
    for e, col in zip(chain.edges, chain.edge_colors):
        c.set_color(*e, 0)
    for e, col in zip(chain.edges, chain.edge_colors):
        c.set_color(*e, b if col == a else a)


def kempe_swap(c: PartialColoring, chain: Chain) -> PartialColoring:
    """``c/chain``: interchange the two colors on ``chain``'s edges."""
    _validate_chain(c, chain)
    new = c.copy()
    _swap_in_place(new, chain)
    return new


def swap_sequence(c: PartialColoring, x: int, palette: Sequence[int]) -> PartialColoring:
    """Successive Kempe changes at ``x`` on ``(p0,p1), (p1,p2), ...``.

    ``palette[0]`` must be missing at ``x``; each later color must be present
    at ``x`` when its swap runs (a repeated color is the identity swap).
    """
    cur = c.copy()
    if not palette:
        return cur
    if palette[0] not in cur.missing(x):
        raise PrecedenceViolation(0, f"color {palette[0]} is not missing at {x}")
    for i in range(1, len(palette)):
        prev, nxt = palette[i - 1], palette[i]
        if prev == nxt:
            continue
        if prev not in cur.missing(x):
            raise PrecedenceViolation(i, f"color {prev} is not missing at {x}")
        if nxt in cur.missing(x):
            raise PrecedenceViolation(i, f"color {nxt} is not present at {x}")
        _swap_in_place(cur, anchored_chain(cur, prev, nxt, x))
    return cur


def shift_targets(c: PartialColoring, r: int, seq: Sequence[int]) -> list[int]:
    targets = []
    for s in seq:
        if not c.graph.has_edge(r, s) or not c.color(r, s):
            raise ValueError(f"{r}{s} is not a colored edge")
        m = c.missing(s)
        if len(m) != 1:
            raise AmbiguousMissing(f"vertex {s} misses {sorted(m)}")
        targets.append(next(iter(m)))
    return targets


def shift(c: PartialColoring, r: int, seq: Sequence[int], check: bool = True) -> PartialColoring:
    """Recolor each ``r s`` (s in ``seq``) by the unique color missing at ``s``.

    The range is applied as one batch; with ``check`` the result must be
    proper, otherwise ``ImproperResult`` is raised and ``c`` is untouched.
    """
    targets = shift_targets(c, r, seq)
    new = c.copy()
    for s in seq:
        new.set_color(r, s, 0)
    for s, t in zip(seq, targets):
        new.set_color(r, s, t)
    if check:
        touched = [r, *seq]
        bad = [(v, col) for v, col in new.conflicts() if v in touched]
        if bad:
            raise ImproperResult(f"shift collides at {bad}")
    return new


def is_stable(
    candidate: PartialColoring,
    base: PartialColoring,
    vertices: Iterable[int] = (),
    edges: Iterable[Edge] = (),
) -> bool:
    """Whether ``candidate`` agrees with ``base`` on missing sets of ``vertices`` and colors of ``edges``."""
    if (
        candidate.graph != base.graph
        or candidate.k != base.k
        or candidate.uncolored_edge != base.uncolored_edge
    ):
        raise MismatchedBase("colorings differ in graph, palette or uncolored edge")
    if any(candidate.missing(v) != base.missing(v) for v in vertices):
        return False
    return all(candidate.color(*e) == base.color(*e) for e in edges)


# -- operation scripts -----------------------------------------------------


@dataclass(frozen=True)
class SwapChain:
    x: int
    a: int
    b: int
    y: int | None = None  # set for a subchain swap on P_[x,y]


@dataclass(frozen=True)
class Shift:
    r: int
    seq: tuple[int, ...]


@dataclass(frozen=True)
class Recolor:
    u: int
    v: int
    old: int
    new: int


@dataclass(frozen=True)
class Uncolor:
    u: int
    v: int


@dataclass(frozen=True)
class ColorEdge:
    u: int
    v: int
    c: int


Step = SwapChain | Shift | Recolor | Uncolor | ColorEdge


@dataclass
class OperationScript:
    steps: list[Step] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def validate(self, g: Graph, k: int) -> None:
        def vert(v: int) -> None:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} not in graph")

        def edge(u: int, v: int) -> None:
            if not g.has_edge(u, v):
                raise ValueError(f"edge {(u, v)} not in graph")

        def color(col: int) -> None:
            if not 1 <= col <= k:
                raise ValueError(f"color {col} outside [1, {k}]")

        for i, st in enumerate(self.steps):
            try:
                if isinstance(st, SwapChain):
                    vert(st.x)
                    if st.y is not None:
                        vert(st.y)
                    color(st.a)
                    color(st.b)
                elif isinstance(st, Shift):
                    for s in st.seq:
                        edge(st.r, s)
                elif isinstance(st, Recolor):
                    edge(st.u, st.v)
                    color(st.old)
                    color(st.new)
                elif isinstance(st, Uncolor):
                    edge(st.u, st.v)
                else:
                    edge(st.u, st.v)
                    color(st.c)
            except ValueError as exc:
                raise ScriptError(i, exc) from exc

    def to_text(self) -> str:
        return "".join(format_step(s) + "\n" for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> "OperationScript":
        steps = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                steps.append(parse_step(line))
        return cls(steps)


def format_step(st: Step) -> str:
    if isinstance(st, SwapChain):
        if st.y is None:
            return f"swap {st.x} {st.a} {st.b}"
        return f"swapseg {st.x} {st.y} {st.a} {st.b}"
    if isinstance(st, Shift):
        return f"shift {st.r} " + (",".join(map(str, st.seq)) if st.seq else "-")
    if isinstance(st, Recolor):
        return f"recolor {st.u} {st.v} {st.old} {st.new}"
    if isinstance(st, Uncolor):
        return f"uncolor {st.u} {st.v}"
    return f"color {st.u} {st.v} {st.c}"


def parse_step(line: str) -> Step:
    parts = line.split()
    op, args = parts[0], parts[1:]
    try:
        if op == "swap" and len(args) == 3:
            return SwapChain(int(args[0]), int(args[1]), int(args[2]))
        if op == "swapseg" and len(args) == 4:
            x, y, a, b = map(int, args)
            return SwapChain(x, a, b, y)
        if op == "shift" and len(args) in (1, 2):
            seq = () if len(args) == 1 or args[1] == "-" else tuple(int(s) for s in args[1].split(","))
            return Shift(int(args[0]), seq)
        if op == "recolor" and len(args) == 4:
            return Recolor(*map(int, args))
        if op == "uncolor" and len(args) == 2:
            return Uncolor(*map(int, args))
        if op == "color" and len(args) == 3:
            return ColorEdge(*map(int, args))
    except ValueError:
        pass
    raise ValueError(f"malformed script step: {line!r}")


@dataclass(frozen=True)
class StepTrace:
    index: int
    step: Step
    missing_delta: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]
    notes: tuple[str, ...] = ()


def _apply_step(cur: PartialColoring, st: Step, strict: bool) -> tuple[str, ...]:
    notes: tuple[str, ...] = ()
    if isinstance(st, SwapChain):
        ch = chain_through(cur, st.a, st.b, st.x)
        if st.y is not None:
            ch = ch.subchain(st.x, st.y)
        elif ch.is_cycle or ch.vertices[0] != st.x:
            notes = ("interior-anchor",)
        _swap_in_place(cur, ch)
    elif isinstance(st, Shift):
        targets = shift_targets(cur, st.r, st.seq)
        for s in st.seq:
            cur.set_color(st.r, s, 0)
        for s, t in zip(st.seq, targets):
            cur.set_color(st.r, s, t)
    elif isinstance(st, Recolor):
        now = cur.color(st.u, st.v)
        if now != st.old:
            raise ValueError(f"edge {(st.u, st.v)} has color {now}, expected {st.old}")
        cur.set_color(st.u, st.v, st.new)
    elif isinstance(st, Uncolor):
        cur.set_color(st.u, st.v, 0)
    else:
        if cur.color(st.u, st.v):
            raise ValueError(f"edge {(st.u, st.v)} is already colored")
        cur.set_color(st.u, st.v, st.c)
    if strict:
        bad = cur.conflicts()
        if bad:
            raise ImproperResult(f"color clashes at (vertex, color) {bad[:4]}")
    return notes


def _touched(cur: PartialColoring, st: Step) -> set[int]:
    if isinstance(st, SwapChain):
        ch = chain_through(cur, st.a, st.b, st.x)
        return set(ch.vertices)
    if isinstance(st, Shift):
        return {st.r, *st.seq}
    return {st.u, st.v}


def execute_script(
    c: PartialColoring, script: OperationScript, check: str = "step"
) -> tuple[PartialColoring, list[StepTrace]]:
    """Run ``script`` left to right on a copy of ``c``.

    ``check="step"`` forbids color clashes after every step; ``check="end"``
    tolerates transient clashes. Either way the final state must be proper
    with at most the designated edge uncolored. On failure ``ScriptError`` carries the
    step index and ``c`` is left untouched.
    """
    if check not in ("step", "end"):
        raise ValueError("check must be 'step' or 'end'")
    script.validate(c.graph, c.k)
    cur = c.copy()
    trace: list[StepTrace] = []
    for i, st in enumerate(script.steps):
        try:
            watch = _touched(cur, st)
            before = {v: tuple(sorted(cur.missing(v))) for v in watch}
            notes = _apply_step(cur, st, strict=check == "step")
            after = {v: tuple(sorted(cur.missing(v))) for v in watch}
            delta = {v: (before[v], after[v]) for v in sorted(watch) if before[v] != after[v]}
            trace.append(StepTrace(i, st, delta, notes))
        except (ValueError, ImproperResult, AmbiguousMissing) as exc:
            raise ScriptError(i, exc) from exc
    try:
        cur.check()
    except ImproperResult as exc:
        raise ScriptError(len(script.steps), exc) from exc
    return cur, trace
