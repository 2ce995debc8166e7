"""Immutable simple graphs with the degree bookkeeping used throughout."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs; ``edge_list`` fixes the edge ids used by
    colorings and solvers.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} out of range for n={self.n}")
            if u > v:
                raise ValueError(f"edge {(u, v)} not normalized")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        keys = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            k = edge_key(u, v)
            if k in keys:
                raise ValueError(f"duplicate edge {k}")
            keys.add(k)
        return cls(n, frozenset(keys))

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def neighbors_of_degree(self, v: int, d: int) -> tuple[int, ...]:
        """``N_d(v)``: neighbors of ``v`` having degree ``d``."""
        return tuple(w for w in self.adjacency[v] if len(self.adjacency[w]) == d)

    def vertices_of_degree(self, d: int) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.degree(v) == d)

    def without_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges - {edge_key(u, v)})

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the new->old map."""
        order = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(order)}
        sub = frozenset(
            edge_key(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        )
        return Graph(len(order), sub), order

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """Image of the graph under a vertex permutation ``v -> perm[v]``."""
        return Graph(self.n, frozenset(edge_key(perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class DegreeProfile:
    delta: int
    degree: tuple[int, ...]
    v_delta: frozenset[int]
    v_delta_minus_1: frozenset[int]


def degree_profile(g: Graph) -> DegreeProfile:
    d = g.max_degree
    return DegreeProfile(
        delta=d,
        degree=g.degrees,
        v_delta=g.vertices_of_degree(d),
        v_delta_minus_1=g.vertices_of_degree(d - 1) if d > 0 else frozenset(),
    )


def core_subgraph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the maximum-degree vertices, with its embedding map."""
    if g.n == 0:
        return Graph(0, frozenset()), ()
    return g.induced_subgraph(g.vertices_of_degree(g.max_degree))


def is_overfull(g: Graph) -> bool:
    return g.m > g.max_degree * (g.n // 2)


@dataclass(frozen=True)
class HZStructure:
    connected: bool
    delta: int
    core_max_degree: int
    is_hz_candidate: bool


def hz_structure_check(g: Graph) -> HZStructure:
    """Structural half of the Hilton-Zhao condition; class 2 is not tested here."""
    core, _ = core_subgraph(g)
    connected = g.is_connected()
    delta = g.max_degree
    core_deg = core.max_degree
    return HZStructure(connected, delta, core_deg, connected and delta >= 3 and core_deg <= 2)


@dataclass(frozen=True)
class BiregularReport:
    core_two_regular: bool
    min_degree_ok: bool
    two_core_neighbors: bool

    @property
    def all_hold(self) -> bool:
        return self.core_two_regular and self.min_degree_ok and self.two_core_neighbors


def verify_biregular_lemma(g: Graph) -> BiregularReport:
    """Report the three structural facts every HZ-graph must satisfy.

    The caller is responsible for establishing that ``g`` is an HZ-graph; the
    report is computed regardless.
    """
    delta = g.max_degree
    core, _ = core_subgraph(g)
    two_regular = core.n > 0 and all(d == 2 for d in core.degrees)
    odd_cycle = delta == 2 and g.is_connected() and g.n % 2 == 1 and g.m == g.n
    min_ok = g.n > 0 and (g.min_degree == delta - 1 or odd_cycle)
    v_delta = g.vertices_of_degree(delta)
    two_nbrs = all(sum(1 for w in g.neighbors(v) if w in v_delta) >= 2 for v in range(g.n))
    return BiregularReport(two_regular, min_ok, two_nbrs)
