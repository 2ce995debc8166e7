"""Multifans and the structures built on them.

Leaves are indexed from 0 in code (``leaves[0]`` is the vertex written s_1).
Colors keep their natural labels ``1..k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .coloring import PartialColoring, _swap_in_place, are_linked, chain_through, is_elementary
from .errors import ConstraintViolation, InvalidTriple, NotAPermutation, NotElementary
from .graph import Edge, Graph, edge_key
from .search import DEFAULT_EDGE_BOUND, iter_colorings


@dataclass(frozen=True)
class ColoringTriple:
    """A Δ-coloring of ``G - r s1`` with ``r`` of degree Δ and ``s1`` of degree Δ-1."""

    coloring: PartialColoring
    r: int
    s1: int

    @property
    def graph(self) -> Graph:
        return self.coloring.graph

    @property
    def delta(self) -> int:
        return self.coloring.graph.max_degree

    @property
    def edge(self) -> Edge:
        return edge_key(self.r, self.s1)


def validate_triple(c: PartialColoring, r: int, s1: int, hz_mode: bool = True) -> ColoringTriple:
    g = c.graph
    if not g.has_edge(r, s1):
        raise InvalidTriple(f"{r}{s1} is not an edge")
    if c.color(r, s1):
        raise InvalidTriple(f"edge {r}{s1} is colored")
    if c.uncolored_edge != edge_key(r, s1):
        raise InvalidTriple("designated uncolored edge differs from r s1")
    if hz_mode:
        d = g.max_degree
        if c.k != d:
            raise InvalidTriple(f"palette size {c.k} differs from max degree {d}")
        if g.degree(r) != d:
            raise InvalidTriple(f"center {r} has degree {g.degree(r)}, not {d}")
        if g.degree(s1) != d - 1:
            raise InvalidTriple(f"{s1} has degree {g.degree(s1)}, not {d - 1}")
    if not c.is_proper() or len(c.uncolored_edges()) != 1:
        raise InvalidTriple("coloring of G - r s1 is not proper and complete")
    return ColoringTriple(c, r, s1)


# -- multifans ---------------------------------------------------------------


@dataclass(frozen=True)
class Multifan:
    center: int
    leaves: tuple[int, ...]
    witness: tuple[int | None, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    @property
    def spokes(self) -> tuple[Edge, ...]:
        return tuple(edge_key(self.center, s) for s in self.leaves)

    @property
    def size(self) -> int:
        return 1 + len(self.leaves)

    def prefix(self, p: int) -> "Multifan":
        return Multifan(self.center, self.leaves[:p], self.witness[:p])

    def witness_path(self, i: int) -> list[int]:
        """Leaf indices from s_1 to ``leaves[i]`` following witnesses."""
        path = [i]
        while path[-1] != 0:
            path.append(self.witness[path[-1]])
        return path[::-1]


def multifan_witnesses(c: PartialColoring, r: int, leaves: Sequence[int]) -> tuple[int | None, ...] | None:
    """Witness indices if ``leaves`` forms a multifan at ``r`` under ``c``, else ``None``."""
    g = c.graph
    if not leaves or len(set(leaves)) != len(leaves) or r in leaves:
        return None
    if not all(g.has_edge(r, s) for s in leaves):
        return None
    wit: list[int | None] = [None]
    for i in range(1, len(leaves)):
        col = c.color(r, leaves[i])
        found = next((j for j in range(i) if col and col in c.missing(leaves[j])), None)
        if found is None:
            return None
        wit.append(found)
    return tuple(wit)


def is_multifan(c: PartialColoring, r: int, leaves: Sequence[int]) -> bool:
    return multifan_witnesses(c, r, leaves) is not None


def _eligible(g: Graph, r: int, hz_mode: bool) -> set[int]:
    if hz_mode:
        return set(g.neighbors_of_degree(r, g.max_degree - 1))
    return set(g.neighbors(r))


def grow_multifan(
    c: PartialColoring,
    r: int,
    s1: int,
    hz_mode: bool = False,
    start: Sequence[int] | None = None,
) -> Multifan:
    """Greedy inclusion-maximal multifan at ``r`` with first leaf ``s1``.

    At each round the lowest color missing at some current leaf whose spoke at
    ``r`` leads to a new eligible neighbor is absorbed. In HZ mode the input
    must be a coloring-triple and leaves are restricted to degree Δ-1.
    """
    g = c.graph
    if hz_mode:
        validate_triple(c, r, s1, hz_mode=True)
    elif c.color(r, s1):
        raise InvalidTriple(f"edge {r}{s1} must be uncolored")
    eligible = _eligible(g, r, hz_mode)
    leaves = list(start) if start else [s1]
    if leaves[0] != s1:
        raise InvalidTriple("start sequence must begin with s1")
    wit = multifan_witnesses(c, r, leaves)
    if wit is None:
        raise InvalidTriple("start sequence is not a multifan")
    wit = list(wit)
    in_fan = set(leaves)
    while True:
        pool = set()
        for s in leaves:
            pool |= c.missing(s)
        added = False
        for col in sorted(pool):
            w = c.neighbor_via(r, col)
            if w is None or w in in_fan or w not in eligible:
                continue
            j = min(i for i, s in enumerate(leaves) if col in c.missing(s))
            leaves.append(w)
            wit.append(j)
            in_fan.add(w)
            added = True
            break
        if not added:
            return Multifan(r, tuple(leaves), tuple(wit))


def _closure_size(
    g: Graph, k: int, col: Sequence[int], r: int, s1: int, eligible: set[int]
) -> tuple[int, list[int]]:
    """Size of the maximal multifan from a raw color tuple (fast path for certification)."""
    full = (1 << k) - 1
    present = [0] * g.n
    spoke: dict[int, int] = {}
    for (u, v), c in zip(g.edge_list, col):
        if c:
            b = 1 << (c - 1)
            present[u] |= b
            present[v] |= b
            if u == r:
                spoke[c] = v
            elif v == r:
                spoke[c] = u
    leaves = [s1]
    seen = {s1}
    pool = full & ~present[s1]
    grew = True
    while grew:
        grew = False
        a = pool
        while a:
            b = a & -a
            a ^= b
            w = spoke.get(b.bit_length())
            if w is not None and w not in seen and w in eligible:
                seen.add(w)
                leaves.append(w)
                pool |= full & ~present[w]
                grew = True
    return 1 + len(leaves), leaves


# -- inducing structure ----------------------------------------------------------


@dataclass(frozen=True)
class InducingStructure:
    """Partition of the fan's missing colors (minus the center's) by inducing seed.

    ``node[c]`` is the leaf index where ``c`` is missing (0 for the seeds) and
    ``parent[i]`` the leaf whose missing color is the spoke color of leaf ``i``.
    """

    seeds: tuple[int, ...]
    seed_of: dict[int, int]
    node: dict[int, int]
    parent: dict[int, int]
    classes: dict[int, tuple[int, ...]]
    sequences: dict[int, tuple[int, ...]]

    def induced_by(self, c: int) -> int | None:
        return self.seed_of.get(c)

    def _ancestors(self, i: int) -> list[int]:
        out = []
        while i in self.parent:
            i = self.parent[i]
            out.append(i)
        return out

    def precedes(self, a: int, b: int) -> bool:
        """``a ≺ b``: same inducing class and ``a`` strictly earlier along it."""
        if a == b or a not in self.seed_of or b not in self.seed_of:
            return False
        if self.seed_of[a] != self.seed_of[b]:
            return False
        seed = self.seed_of[a]
        if a == seed:
            return True
        if b == seed:
            return False
        return self.node[a] in self._ancestors(self.node[b])

    def last_colors(self, seed: int) -> tuple[int, ...]:
        cls = self.classes[seed]
        return tuple(c for c in cls if not any(self.precedes(c, d) for d in cls))


def inducing_structure(F: Multifan, c: PartialColoring) -> InducingStructure:
    if not is_elementary(c, F.vertices):
        raise NotElementary("V(F) is not elementary")
    miss = [c.missing(s) for s in F.leaves]
    owner = {col: i for i, m in enumerate(miss) for col in m}
    seeds = tuple(sorted(miss[0]))
    parent: dict[int, int] = {}
    for i in range(1, len(F.leaves)):
        parent[i] = owner[c.color(F.center, F.leaves[i])]
    branch: dict[int, int] = {}  # leaf index -> seed
    for i in range(1, len(F.leaves)):
        j = i
        while parent[j] != 0:
            j = parent[j]
        branch[i] = c.color(F.center, F.leaves[j])
    seed_of = {s: s for s in seeds}
    node = {s: 0 for s in seeds}
    for i in range(1, len(F.leaves)):
        for col in miss[i]:
            seed_of[col] = branch[i]
            node[col] = i
    depth = {0: 0}
    for i in range(1, len(F.leaves)):
        depth[i] = depth[parent[i]] + 1
    sequences = {
        s: tuple(sorted((i for i in branch if branch[i] == s), key=lambda i: (depth[i], i)))
        for s in seeds
    }
    classes = {
        s: (s,) + tuple(col for i in sequences[s] for col in sorted(miss[i])) for s in seeds
    }
    return InducingStructure(seeds, seed_of, node, parent, classes, sequences)


# -- typical multifans -------------------------------------------------------------


@dataclass(frozen=True)
class TypicalMultifan:
    """A multifan relabelled so that the center misses 1 and s_1 misses {2, Δ}.

    ``alpha`` and ``beta`` are 1-based leaf positions as in the usual notation:
    leaves ``1..alpha`` carry the 2-inducing run, ``alpha+1..beta`` the
    Δ-inducing one. ``color_map`` sends original colors to typical ones;
    ``leaf_order[i]`` is the original leaf index of typical leaf ``i``.
    """

    fan: Multifan
    alpha: int
    beta: int
    delta: int
    color_map: dict[int, int] = field(hash=False)
    leaf_order: tuple[int, ...] = ()

    @property
    def center(self) -> int:
        return self.fan.center

    def s(self, i: int) -> int:
        """The vertex s_i (1-based)."""
        return self.fan.leaves[i - 1]

    @property
    def inverse_color_map(self) -> dict[int, int]:
        return {v: k for k, v in self.color_map.items()}

    def two_inducing(self) -> tuple[int, ...]:
        return tuple(range(2, self.alpha + 2))

    def delta_inducing(self) -> tuple[int, ...]:
        return (self.delta,) + tuple(range(self.alpha + 2, self.beta + 2))

    def leaf_missing(self, col: int) -> int | None:
        """The leaf (vertex id) whose single missing color is ``col``, s_1 for 2 and Δ."""
        if col in (2, self.delta):
            return self.s(1)
        if 3 <= col <= self.beta + 1:
            return self.s(col - 1)
        return None


def is_typical(c: PartialColoring, F: Multifan, alpha: int) -> bool:
    d = c.k
    r = F.center
    beta = len(F.leaves)
    if c.missing(r) != {1} or c.missing(F.leaves[0]) != {2, d}:
        return False
    for i in range(2, beta + 1):
        s = F.leaves[i - 1]
        if i == alpha + 1:
            if c.color(r, s) != d or c.missing(s) != {alpha + 2}:
                return False
        elif c.color(r, s) != i or c.missing(s) != {i + 1}:
            return False
    return True


def normalize_typical(
    F: Multifan, c: PartialColoring, two_seed: int | None = None
) -> tuple[TypicalMultifan, PartialColoring]:
    """Reorder leaves and permute colors so that ``F`` becomes typical.

    ``two_seed`` (a color missing at s_1) becomes 2 and the other one Δ;
    by default the smaller one becomes 2.
    """
    d = c.k
    if not is_elementary(c, F.vertices):
        raise NotElementary("V(F) is not elementary")
    if len(c.missing(F.center)) != 1 or len(c.missing(F.leaves[0])) != 2:
        raise InvalidTriple("center must miss one color and s1 two")
    if any(len(c.missing(s)) != 1 for s in F.leaves[1:]):
        raise InvalidTriple("later leaves must miss exactly one color")
    ind = inducing_structure(F, c)
    low, high = ind.seeds
    if two_seed is not None:
        if two_seed not in ind.seeds:
            raise InvalidTriple(f"color {two_seed} is not missing at s1")
        low, high = two_seed, (high if two_seed == low else low)
    run2, run_d = list(ind.sequences[low]), list(ind.sequences[high])
    order = [0] + run2 + run_d
    alpha = 1 + len(run2)
    beta = len(order)
    cmap: dict[int, int] = {next(iter(c.missing(F.center))): 1, low: 2, high: d}
    for pos, i in enumerate(order[1:], start=2):
        cmap[next(iter(c.missing(F.leaves[i])))] = pos + 1
    rest_src = [x for x in range(1, d + 1) if x not in cmap]
    rest_dst = [x for x in range(1, d + 1) if x not in cmap.values()]
    cmap.update(zip(rest_src, rest_dst))
    leaves = tuple(F.leaves[i] for i in order)
    relabeled = c.relabel_colors(cmap)
    wit = multifan_witnesses(relabeled, F.center, leaves)
    fan = Multifan(F.center, leaves, wit)
    typ = TypicalMultifan(fan, alpha, beta, d, cmap, tuple(order))
    if not is_typical(relabeled, fan, alpha):
        raise AssertionError("normalization failed to produce a typical multifan")
    return typ, relabeled


# -- rotations ---------------------------------------------------------------------


@dataclass(frozen=True)
class Rotation:
    center: int
    vertices: tuple[int, ...]
    kind: str = "plain"  # plain | stable | near-stable


def is_rotation(c: PartialColoring, r: int, ws: Sequence[int]) -> bool:
    g = c.graph
    if not ws or len(set(ws)) != len(ws) or r in ws:
        return False
    if not all(g.has_edge(r, w) for w in ws):
        return False
    if not is_elementary(c, ws):
        return False
    for i, w in enumerate(ws):
        prev = ws[i - 1]
        m = c.missing(prev)
        if len(m) != 1 or c.color(r, w) not in m:
            return False
    return True


def _single(c: PartialColoring, v: int) -> int | None:
    m = c.missing(v)
    return next(iter(m)) if len(m) == 1 else None


def is_stable_rotation(c: PartialColoring, r: int, ws: Sequence[int], beta: int) -> bool:
    """Rotation whose missing colors lie in [β+2, Δ-1], each (1, ·)-linked to the center."""
    if not is_rotation(c, r, ws):
        return False
    d = c.k
    for w in ws:
        m = _single(c, w)
        if m is None or not beta + 2 <= m <= d - 1 or not are_linked(c, 1, m, r, w):
            return False
    return True


def is_near_stable_rotation(c: PartialColoring, r: int, ws: Sequence[int], alpha: int, beta: int) -> bool:
    """Sequence with consecutive spoke/missing agreement, linked except at the end, last missing α+1."""
    d = c.k
    if not ws or len(set(ws)) != len(ws):
        return False
    for i in range(len(ws) - 1):
        m = _single(c, ws[i])
        if m is None or c.color(r, ws[i + 1]) != m or not beta + 2 <= m <= d - 1:
            return False
        if not are_linked(c, 1, m, r, ws[i]):
            return False
    return _single(c, ws[-1]) == alpha + 1


def find_rotation_partition(c: PartialColoring, r: int, tail: Sequence[int]) -> list[Rotation]:
    """Split ``tail`` into rotations via the cycles of spoke color -> missing color."""
    if not tail:
        return []
    by_spoke: dict[int, int] = {}
    for w in tail:
        col = c.color(r, w)
        if not col:
            raise NotAPermutation(f"spoke {r}{w} is uncolored")
        by_spoke[col] = w
    nxt: dict[int, int] = {}
    for w in tail:
        m = _single(c, w)
        if m is None or m not in by_spoke:
            raise NotAPermutation(f"missing color of {w} is not a spoke color of the tail")
        nxt[w] = by_spoke[m]
    if len(set(nxt.values())) != len(tail):
        raise NotAPermutation("missing colors repeat within the tail")
    rotations = []
    done: set[int] = set()
    for w in tail:
        if w in done:
            continue
        cyc = [w]
        done.add(w)
        while nxt[cyc[-1]] != w:
            cyc.append(nxt[cyc[-1]])
            done.add(cyc[-1])
        # rotation order needs spoke(w_l) = missing(w_{l-1}), i.e. w_l = nxt[w_{l-1}]
        rotations.append(Rotation(r, tuple(cyc)))
    return rotations


# -- certification ---------------------------------------------------------------


@dataclass(frozen=True)
class MaximumCertificate:
    is_maximum: bool | None
    mode: str  # exhaustive | heuristic | saturated
    hz_mode: bool
    best_size: int
    witness: dict | None = None


@lru_cache(maxsize=256)
def max_multifan_size(
    g: Graph, r: int, k: int, hz_mode: bool, bound: int = DEFAULT_EDGE_BOUND
) -> tuple[int, dict | None]:
    """Largest multifan size at ``r`` over every admissible first leaf and coloring."""
    eligible = _eligible(g, r, hz_mode)
    best, wit = 0, None
    cap = 1 + len(eligible)
    for s in sorted(eligible):
        for col in iter_colorings(g, k, skip=(r, s), bound=bound):
            size, leaves = _closure_size(g, k, col, r, s, eligible)
            if size > best:
                best, wit = size, {"s1": s, "colors": list(col), "leaves": leaves}
                if best == cap:
                    return best, wit
    return best, wit


def _random_kempe_step(c: PartialColoring, rng: random.Random) -> tuple:
    v = rng.randrange(c.graph.n)
    a, b = rng.sample(range(1, c.k + 1), 2)
    ch = chain_through(c, a, b, v)
    _swap_in_place(c, ch)
    return ch


def certify_maximum(
    F: Multifan,
    c: PartialColoring,
    mode: str = "exhaustive",
    hz_mode: bool = True,
    bound: int = DEFAULT_EDGE_BOUND,
    budget: int = 10_000,
    seed: int = 42,
) -> MaximumCertificate:
    g = c.graph
    r = F.center
    eligible = _eligible(g, r, hz_mode)
    if F.size == 1 + len(eligible):
        return MaximumCertificate(True, "saturated", hz_mode, F.size)
    if mode == "exhaustive":
        best, wit = max_multifan_size(g, r, c.k, hz_mode, bound)
        if best > F.size:
            return MaximumCertificate(False, mode, hz_mode, best, wit)
        return MaximumCertificate(True, mode, hz_mode, best)
    if mode != "heuristic":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    cur = c.copy()
    s_cur = F.leaves[0]
    for _ in range(budget):
        if rng.random() < 0.2:
            # move the uncolored edge from r s_cur to r s when the freed color fits at s_cur
            s = rng.choice(sorted(eligible))
            col = cur.color(r, s)
            if s != s_cur and col and col in cur.missing(s_cur):
                cur.set_color(r, s, 0)
                cur.set_color(r, s_cur, col)
                cur.uncolored_edge = edge_key(r, s)
                s_cur = s
        else:
            _random_kempe_step(cur, rng)
        size, leaves = _closure_size(g, cur.k, cur.colors(), r, s_cur, eligible)
        if size > F.size:
            wit = {"s1": s_cur, "colors": list(cur.colors()), "leaves": leaves}
            return MaximumCertificate(False, mode, hz_mode, size, wit)
    return MaximumCertificate(None, mode, hz_mode, F.size)


@dataclass(frozen=True)
class PseudoCertificate:
    elementary: bool | None
    mode: str  # exhaustive | sampled
    checked: int
    witness: list[int] | None = None

    @property
    def certified(self) -> bool:
        return self.mode == "exhaustive" and self.elementary is True


@dataclass(frozen=True)
class PseudoMultifan:
    center: int
    leaves: tuple[int, ...]
    t: int
    certificate: PseudoCertificate | None = None

    @property
    def fan_leaves(self) -> tuple[int, ...]:
        return self.leaves[: self.t]

    @property
    def tail(self) -> tuple[int, ...]:
        return self.leaves[self.t :]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)


def _stable_constraints(F: Multifan, c: PartialColoring):
    fixed = {e: c.color(*e) for e in F.spokes if c.color(*e)}
    forbid = {v: c.missing(v) for v in F.vertices}
    return fixed, forbid


def iter_stable_colorings(F: Multifan, c: PartialColoring, bound: int = DEFAULT_EDGE_BOUND):
    """Every (F, c)-stable coloring of ``G - r s1`` as a raw color tuple."""
    fixed, forbid = _stable_constraints(F, c)
    return iter_colorings(c.graph, c.k, skip=c.uncolored_edge, fixed=fixed, forbid=forbid, bound=bound)


def _elementary_raw(g: Graph, k: int, col: Sequence[int], vertices: Sequence[int]) -> bool:
    full = (1 << k) - 1
    present = {v: 0 for v in vertices}
    for (u, v), x in zip(g.edge_list, col):
        if x:
            b = 1 << (x - 1)
            if u in present:
                present[u] |= b
            if v in present:
                present[v] |= b
    seen = 0
    for v in vertices:
        m = full & ~present[v]
        if seen & m:
            return False
        seen |= m
    return True


def stable_kempe_walk(F_vertices, F_edges, c: PartialColoring, steps: int, rng: random.Random):
    """Random Kempe changes that keep ``c`` stable on the given vertices and edges.

    Yields the current coloring after every accepted change (shared object).
    """
    cur = c.copy()
    fv = set(F_vertices)
    fe = set(F_edges)
    n, k = cur.graph.n, cur.k
    for _ in range(steps):
        v = rng.randrange(n)
        a, b = rng.sample(range(1, k + 1), 2)
        ch = chain_through(cur, a, b, v)
        if not ch.edges or fe & ch.edge_set:
            continue
        if ch.is_path and (ch.vertices[0] in fv or ch.vertices[-1] in fv):
            continue
        _swap_in_place(cur, ch)
        yield cur


def certify_pseudo_multifan(
    S: PseudoMultifan,
    c: PartialColoring,
    mode: str = "exhaustive",
    bound: int = DEFAULT_EDGE_BOUND,
    budget: int = 10_000,
    seed: int = 42,
) -> PseudoCertificate:
    """Check that V(S) stays elementary under every (F, c)-stable coloring."""
    g = c.graph
    wit = multifan_witnesses(c, S.center, S.fan_leaves)
    if wit is None:
        raise InvalidTriple("prefix is not a multifan")
    F = Multifan(S.center, S.fan_leaves, wit)
    verts = S.vertices
    if mode == "exhaustive":
        checked = 0
        for col in iter_stable_colorings(F, c, bound):
            checked += 1
            if not _elementary_raw(g, c.k, col, verts):
                return PseudoCertificate(False, mode, checked, list(col))
        return PseudoCertificate(True, mode, checked)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    checked = 1
    if not is_elementary(c, verts):
        return PseudoCertificate(False, mode, checked, list(c.colors()))
    for cur in stable_kempe_walk(F.vertices, F.spokes, c, budget, rng):
        checked += 1
        if not is_elementary(cur, verts):
            return PseudoCertificate(False, mode, checked, list(cur.colors()))
    return PseudoCertificate(None, mode, checked)


# -- lollipops ---------------------------------------------------------------------


@dataclass(frozen=True)
class Lollipop:
    typical: TypicalMultifan
    u: int
    x: int
    ru_is_alpha1: bool
    x_misses_alpha1: bool
    ux_color: int
    ux_kind: str  # "delta" | "two-inducing" | "other"

    @property
    def r(self) -> int:
        return self.typical.center

    @property
    def premise(self) -> bool:
        return self.ru_is_alpha1 and self.x_misses_alpha1


def build_lollipop(F: TypicalMultifan, u: int, x: int, c: PartialColoring) -> Lollipop:
    """Validate ``(F, ru, u, ux, x)`` as a lollipop under the typical coloring ``c``."""
    g = c.graph
    d = g.max_degree
    r = F.center
    if not g.has_edge(r, u):
        raise ConstraintViolation("u-adjacent-r", f"{u} is not a neighbor of {r}")
    if g.degree(u) != d:
        raise ConstraintViolation("u-degree", f"{u} has degree {g.degree(u)}, not {d}")
    if not g.has_edge(u, x):
        raise ConstraintViolation("x-adjacent-u", f"{x} is not a neighbor of {u}")
    if g.degree(x) != d - 1:
        raise ConstraintViolation("x-degree", f"{x} has degree {g.degree(x)}, not {d - 1}")
    if x in F.fan.leaves[: F.beta]:
        raise ConstraintViolation("x-outside-fan", f"{x} is a fan leaf")
    if len({r, u, x, *F.fan.leaves}) != 3 + len(F.fan.leaves):
        raise ConstraintViolation("distinct", "lollipop entries repeat")
    a1 = F.alpha + 1
    uxc = c.color(u, x)
    if uxc == d:
        kind = "delta"
    elif uxc in F.two_inducing():
        kind = "two-inducing"
    else:
        kind = "other"
    return Lollipop(F, u, x, c.color(r, u) == a1, c.missing(x) == {a1}, uxc, kind)
