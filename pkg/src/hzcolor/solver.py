"""Exact chromatic index, constructive (Δ+1)-coloring and graph classification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import PartialColoring, _swap_in_place, anchored_chain, are_linked
from .errors import BudgetExceeded, TooLarge
from .fans import Multifan, grow_multifan
from .graph import Edge, Graph, core_subgraph, edge_key, is_overfull
from .search import DEFAULT_EDGE_BOUND, enumerate_colorings, find_coloring, iter_colorings

__all__ = [
    "Classification",
    "chromatic_index",
    "classify",
    "enumerate_colorings",
    "is_critical_edge",
    "is_delta_critical",
    "iter_colorings",
    "vizing_color",
]

EXACT_EDGE_GUARD = 30
DEFAULT_NODE_BUDGET = 5_000_000


def _fan_shift_and_close(c: PartialColoring, F: Multifan, i: int, gamma: int) -> None:
    """Rotate spokes along the witness path to ``leaves[i]`` and color its spoke ``gamma``."""
    r = F.center
    path = [F.leaves[j] for j in F.witness_path(i)]
    shifted = [c.color(r, w) for w in path[1:]]
    for w in path[1:]:
        c.set_color(r, w, 0)
    for w, col in zip(path[:-1], shifted):
        c.set_color(r, w, col)
    c.set_color(r, path[-1], gamma)


def _extend(c: PartialColoring, r: int, s1: int) -> None:
    """Color the uncolored edge ``r s1`` with ``c.k >= Δ + 1`` colors, recoloring as needed."""
    for _ in range(3):
        F = grow_multifan(c, r, s1)
        mr = c.missing(r)
        for i, s in enumerate(F.leaves):
            common = mr & c.missing(s)
            if common:
                _fan_shift_and_close(c, F, i, min(common))
                return
        owners: dict[int, list[int]] = {}
        for i, s in enumerate(F.leaves):
            for col in c.missing(s):
                owners.setdefault(col, []).append(i)
        shared = sorted(col for col, ix in owners.items() if len(ix) > 1)
        if not shared:
            raise AssertionError("maximal multifan is elementary with Δ+1 colors")
        beta = shared[0]
        i, j = owners[beta][0], owners[beta][1]
        alpha = min(mr)
        target = F.leaves[j] if are_linked(c, alpha, beta, r, F.leaves[i]) else F.leaves[i]
        _swap_in_place(c, anchored_chain(c, beta, alpha, target))
    raise AssertionError("recoloring did not terminate")


def vizing_color(g: Graph) -> PartialColoring:
    """A proper edge coloring with at most Δ+1 colors, built one edge at a time."""
    k = g.max_degree + 1
    c = PartialColoring(g, k)
    for u, v in g.edge_list:
        c.uncolored_edge = (u, v)
        _extend(c, u, v)
    c.uncolored_edge = None
    c.check()
    return c


def _colorable(g: Graph, k: int, budget: int | None) -> bool:
    return find_coloring(g, k, budget=budget) is not None


def chromatic_index(
    g: Graph, budget: int | None = DEFAULT_NODE_BUDGET, guard: int | None = EXACT_EDGE_GUARD
) -> int:
    """Exact χ'. Only the question "is G Δ-colorable?" is searched."""
    d = g.max_degree
    if d <= 1:
        return d
    if guard is not None and g.m > guard:
        raise TooLarge(f"{g.m} edges exceed the exact-search guard {guard}")
    try:
        return d if _colorable(g, d, budget) else d + 1
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), interval=(d, d + 1)) from exc


def is_critical_edge(g: Graph, e: Edge, budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    return chromatic_index(g.without_edge(*e), budget) < chromatic_index(g, budget)


def is_delta_critical(g: Graph, budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    if not g.is_connected():
        return False
    chi = chromatic_index(g, budget)
    if chi != g.max_degree + 1:
        return False
    return all(chromatic_index(g.without_edge(*e), budget) < chi for e in g.edge_list)


@dataclass(frozen=True)
class Classification:
    delta: int
    chi_prime: int | None
    graph_class: int | None
    overfull: bool
    is_critical: bool | None
    is_hz: bool | None
    connected: bool
    core_max_degree: int
    notes: tuple[str, ...] = field(default=())
    chi_interval: tuple[int, int] | None = None

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "chi_prime": self.chi_prime,
            "class": self.graph_class,
            "overfull": self.overfull,
            "is_critical": self.is_critical,
            "is_hz": self.is_hz,
            "connected": self.connected,
            "core_max_degree": self.core_max_degree,
            "chi_interval": list(self.chi_interval) if self.chi_interval else None,
            "notes": list(self.notes),
        }


def classify(
    g: Graph,
    budget: int | None = DEFAULT_NODE_BUDGET,
    guard: int | None = EXACT_EDGE_GUARD,
    criticality: bool = True,
) -> Classification:
    """Full class/overfull/criticality/HZ record.

    Components are solved separately; χ'(G) is the maximum over them and the
    class is taken relative to Δ(G).
    """
    d = g.max_degree
    connected = g.is_connected()
    core, _ = core_subgraph(g)
    overfull = is_overfull(g)
    notes = []
    chi = 0
    try:
        for comp in g.components():
            if len(comp) == 1:
                continue
            sub, _ = g.induced_subgraph(comp)
            chi = max(chi, chromatic_index(sub, budget, guard))
    except (BudgetExceeded, TooLarge) as exc:
        notes.append(f"exact search abandoned: {exc}")
        return Classification(
            d, None, None, overfull, None, None, connected, core.max_degree, tuple(notes), (d, d + 1)
        )
    klass = 1 if chi == d else 2
    is_hz = connected and klass == 2 and core.max_degree <= 2
    critical: bool | None = None
    if criticality:
        critical = False
        if connected and klass == 2:
            critical = all(
                chromatic_index(g.without_edge(*e), budget, guard) < chi for e in g.edge_list
            )
    if len(g.components()) > 1:
        notes.append("disconnected: classified per component")
    return Classification(d, chi, klass, overfull, critical, is_hz, connected, core.max_degree, tuple(notes))
