"""Named small graphs used by the tests, scripts and acceptance suite."""

from __future__ import annotations

import itertools
import random
from typing import Callable

from .graph import Graph
from .solver import chromatic_index


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def k5_minus_edge() -> Graph:
    return complete(5).without_edge(0, 1)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def p_star() -> Graph:
    """Petersen graph with vertex 9 deleted."""
    sub, _ = petersen().induced_subgraph(range(9))
    return sub


def k7_minus_2k2_k3() -> Graph:
    """K7 minus a perfect matching on {0,1,2,3} and a triangle on {4,5,6}.

    Δ = 5, the core is the 4-cycle 0-2-1-3, and 16 > 5·3 edges make it
    overfull; vertices 4, 5, 6 have degree 4.
    """
    removed = {(0, 1), (2, 3), (4, 5), (4, 6), (5, 6)}
    return Graph.from_edges(7, [e for e in itertools.combinations(range(7), 2) if e not in removed])


def random_class1(seed: int, n: int = 8, p: float = 0.45) -> Graph:
    """First connected class-1 graph with Δ >= 3 drawn from G(n, p) under ``seed``."""
    rng = random.Random(seed)
    while True:
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if g.is_connected() and g.max_degree >= 3 and chromatic_index(g) == g.max_degree:
            return g


FIXTURES: dict[str, Callable[[], Graph]] = {
    "C5": lambda: cycle(5),
    "C7": lambda: cycle(7),
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K5-e": k5_minus_edge,
    "Petersen": petersen,
    "P*": p_star,
    "K7-2K2-K3": k7_minus_2k2_k3,
    "random-class1-1": lambda: random_class1(1),
    "random-class1-2": lambda: random_class1(2),
    "random-class1-3": lambda: random_class1(3),
}


def fixture(name: str) -> Graph:
    return FIXTURES[name]()


def fixture_filename(name: str) -> str:
    return name.replace("*", "star") + ".edges"
