"""Executable checks of multifan, pseudo-multifan and lollipop statements.

Every check returns ``CheckReport`` records. Premises are tested explicitly:
an unmet premise gives ``vacuous`` with the clause id in ``premise``; a
premise that could only be sampled, not enumerated, gives ``uncertified``.
Fail reports carry a witness that ``replay_witness`` turns back into the same
verdict.
"""

from __future__ import annotations

import hashlib
import json
import random
from collections import Counter, defaultdict, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .coloring import (
    OperationScript,
    PartialColoring,
    _swap_in_place,
    anchored_chain,
    are_linked,
    chain_through,
    execute_script,
    is_elementary,
)
from .errors import (
    BudgetExceeded,
    ConstraintViolation,
    InvalidTriple,
    NotAPermutation,
    NotElementary,
    TooLarge,
)
from .fans import (
    Multifan,
    PseudoMultifan,
    _random_kempe_step,
    build_lollipop,
    certify_maximum,
    certify_pseudo_multifan,
    find_rotation_partition,
    grow_multifan,
    inducing_structure,
    is_rotation,
    multifan_witnesses,
    normalize_typical,
    stable_kempe_walk,
)
from .graph import Graph, core_subgraph, edge_key
from .io import parse_graph6, to_graph6
from .search import DEFAULT_EDGE_BOUND, find_coloring, iter_colorings
from .solver import classify

PASS, FAIL, VACUOUS, UNCERTIFIED = "pass", "fail", "vacuous", "uncertified"
VERDICTS = (PASS, FAIL, VACUOUS, UNCERTIFIED)

CHECK_GROUPS = {
    "fan": ("fan_elementary", "fan_linked"),
    "crossfan": ("crossfan_linked", "crossfan_center_on_chain"),
    "pseudo": (
        "pseudo_rotation_partition",
        "pseudo_center_linked",
        "pseudo_gamma_chain",
        "pseudo_delta_chain",
    ),
    "lollipop": (
        "lollipop_spoke_chain",
        "lollipop_x_chain_ends_at_center",
        "lollipop_late_two_inducing",
        "lollipop_delta_inducing",
        "lollipop_early_two_inducing",
    ),
    "rotation": ("rotation_stable", "rotation_near_stable"),
    "nonadjacency": (
        "delta_edge_color_s1",
        "delta_edge_color_salpha",
        "nonadjacent_two_inducing_fan",
        "nonadjacent_mu_neighbors",
    ),
}


@dataclass
class CheckReport:
    check_id: str
    instance: dict
    verdict: str
    witness: dict | None = None
    detail: str = ""
    premise: str | None = None

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
            "detail": self.detail,
            "premise": self.premise,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def graph_hash(g: Graph) -> str:
    return hashlib.sha1(to_graph6(g).encode()).hexdigest()[:12]


@dataclass
class Instance:
    """A coloring of ``G - r s1`` plus the premise flags the checks depend on.

    ``class2`` is the class-2 premise of the multifan lemmas; ``hz`` says the
    instance is a coloring-triple of an HZ-graph. ``base`` and ``script``
    record how ``coloring`` was produced so witnesses can be replayed.
    """

    name: str
    coloring: PartialColoring
    r: int
    s1: int
    class2: bool
    hz: bool
    base: tuple[int, ...] | None = None
    script: str = ""
    _g6: str = field(default="", repr=False)

    def __post_init__(self) -> None:
        if not self._g6:
            self._g6 = to_graph6(self.coloring.graph)
        if self.base is None:
            self.base = self.coloring.colors()

    @property
    def graph(self) -> Graph:
        return self.coloring.graph

    def descriptor(self, **extra) -> dict:
        out = {
            "graph": self.name,
            "graph_hash": hashlib.sha1(self._g6.encode()).hexdigest()[:12],
            "r": self.r,
            "s1": self.s1,
            "coloring": list(self.coloring.colors()),
        }
        out.update(extra)
        return out

    def witness(self, group: str, **args) -> dict:
        return {
            "group": group,
            "graph6": self._g6,
            "k": self.coloring.k,
            "uncolored": [self.r, self.s1],
            "coloring": list(self.base),
            "script": self.script,
            "class2": self.class2,
            "hz": self.hz,
            "name": self.name,
            "args": args,
        }

    def report(
        self,
        check_id: str,
        verdict: str,
        group: str,
        args: dict,
        detail: str = "",
        premise: str | None = None,
        **extra,
    ) -> CheckReport:
        wit = self.witness(group, **args) if verdict == FAIL else None
        return CheckReport(check_id, self.descriptor(**args, **extra), verdict, wit, detail, premise)


def _vacuous(inst: Instance, group: str, premise: str, args: dict | None = None, detail: str = ""):
    return [
        inst.report(cid, VACUOUS, group, args or {}, detail=detail, premise=premise)
        for cid in CHECK_GROUPS[group]
    ]


def _fan_from_leaves(c: PartialColoring, r: int, leaves: Sequence[int]) -> Multifan:
    wit = multifan_witnesses(c, r, leaves)
    if wit is None:
        raise InvalidTriple(f"{list(leaves)} is not a multifan at {r}")
    return Multifan(r, tuple(leaves), wit)


def _single(c: PartialColoring, v: int) -> int | None:
    m = c.missing(v)
    return next(iter(m)) if len(m) == 1 else None


# -- multifan lemmas -----------------------------------------------------------


def check_fan_lemma(inst: Instance, leaves: Sequence[int] | None = None) -> list[CheckReport]:
    """Elementarity of V(F) and (α, β)-linkage of the center with every leaf."""
    c, r = inst.coloring, inst.r
    F = _fan_from_leaves(c, r, leaves) if leaves else grow_multifan(c, r, inst.s1)
    args = {"leaves": list(F.leaves)}
    if not inst.class2:
        return _vacuous(inst, "fan", "class-2", args)
    out = []
    clash = [
        (a, b)
        for i, a in enumerate(F.vertices)
        for b in F.vertices[i + 1 :]
        if c.missing(a) & c.missing(b)
    ]
    if clash:
        out.append(inst.report("fan_elementary", FAIL, "fan", args, f"missing sets meet at {clash[0]}"))
    else:
        out.append(inst.report("fan_elementary", PASS, "fan", args, f"{F.size} vertices"))
    pairs, bad = 0, []
    for a in sorted(c.missing(r)):
        for s in F.leaves:
            for b in sorted(c.missing(s)):
                if a == b:
                    continue
                pairs += 1
                if not are_linked(c, a, b, r, s):
                    bad.append((a, b, s))
    if bad:
        a, b, s = bad[0]
        out.append(inst.report("fan_linked", FAIL, "fan", args, f"r and {s} are ({a},{b})-unlinked"))
    else:
        out.append(inst.report("fan_linked", PASS, "fan", args, f"{pairs} pairs"))
    return out


def check_crossfan(inst: Instance, leaves: Sequence[int] | None = None) -> list[CheckReport]:
    """Linkage between leaves of different inducing classes; the center on same-class chains."""
    c, r = inst.coloring, inst.r
    F = _fan_from_leaves(c, r, leaves) if leaves else grow_multifan(c, r, inst.s1)
    args = {"leaves": list(F.leaves)}
    if not inst.class2:
        return _vacuous(inst, "crossfan", "class-2", args)
    if len(F.leaves) < 2:
        return _vacuous(inst, "crossfan", "distinct-leaves", args)
    try:
        ind = inducing_structure(F, c)
    except NotElementary:
        return [
            inst.report(cid, FAIL, "crossfan", args, "V(F) is not elementary")
            for cid in CHECK_GROUPS["crossfan"]
        ]
    linked_n, linked_bad, chain_n, chain_bad = 0, [], 0, []
    for i, si in enumerate(F.leaves):
        for j, sj in enumerate(F.leaves):
            if i == j:
                continue
            for d in sorted(c.missing(si)):
                for lam in sorted(c.missing(sj)):
                    if ind.seed_of[d] != ind.seed_of[lam]:
                        if i < j:
                            linked_n += 1
                            if not are_linked(c, d, lam, si, sj):
                                linked_bad.append((d, lam, si, sj))
                    elif ind.precedes(d, lam) and not are_linked(c, d, lam, si, sj):
                        chain_n += 1
                        if r not in anchored_chain(c, d, lam, sj):
                            chain_bad.append((d, lam, sj))
    out = []
    if linked_n == 0:
        out.append(inst.report("crossfan_linked", VACUOUS, "crossfan", args, premise="different-classes"))
    elif linked_bad:
        d, lam, si, sj = linked_bad[0]
        out.append(inst.report("crossfan_linked", FAIL, "crossfan", args, f"{si},{sj} ({d},{lam})-unlinked"))
    else:
        out.append(inst.report("crossfan_linked", PASS, "crossfan", args, f"{linked_n} pairs"))
    if chain_n == 0:
        out.append(
            inst.report("crossfan_center_on_chain", VACUOUS, "crossfan", args, premise="same-class-unlinked")
        )
    elif chain_bad:
        d, lam, sj = chain_bad[0]
        out.append(
            inst.report("crossfan_center_on_chain", FAIL, "crossfan", args, f"r off P_{sj}({d},{lam})")
        )
    else:
        out.append(inst.report("crossfan_center_on_chain", PASS, "crossfan", args, f"{chain_n} pairs"))
    return out


# -- pseudo-multifans ----------------------------------------------------------------


def _certify_max(F: Multifan, c: PartialColoring, bound: int, budget: int, seed: int):
    try:
        return certify_maximum(F, c, "exhaustive", hz_mode=True, bound=bound)
    except TooLarge:
        return certify_maximum(F, c, "heuristic", hz_mode=True, budget=budget, seed=seed)


def _certify_pseudo(S: PseudoMultifan, c: PartialColoring, bound: int, budget: int, seed: int):
    try:
        return certify_pseudo_multifan(S, c, "exhaustive", bound=bound)
    except TooLarge:
        return certify_pseudo_multifan(S, c, "sampled", budget=budget, seed=seed)


def check_pseudo_theorem(
    inst: Instance,
    bound: int = DEFAULT_EDGE_BOUND,
    budget: int = 2000,
    seed: int = 42,
) -> list[CheckReport]:
    """Rotation partition of the tail and the three chain clauses for a pseudo-multifan.

    The pseudo-multifan is the maximal multifan at r followed by the remaining
    (Δ-1)-neighbors of r in increasing order.
    """
    group = "pseudo"
    args = {"bound": bound, "budget": budget, "seed": seed}
    if not inst.hz:
        return _vacuous(inst, group, "coloring-triple", args)
    c, r = inst.coloring, inst.r
    g = c.graph
    F = grow_multifan(c, r, inst.s1, hz_mode=True)
    tail = tuple(sorted(set(g.neighbors_of_degree(r, g.max_degree - 1)) - set(F.leaves)))
    extra = {"fan": list(F.leaves), "tail": list(tail)}
    if not tail:
        return [
            inst.report(cid, VACUOUS, group, args, premise="nonempty-tail", **extra)
            for cid in CHECK_GROUPS[group]
        ]
    mcert = _certify_max(F, c, bound, budget, seed)
    if mcert.is_maximum is False:
        return [
            inst.report(
                cid, VACUOUS, group, args, f"a multifan of size {mcert.best_size} exists",
                premise="maximum-multifan", **extra,
            )
            for cid in CHECK_GROUPS[group]
        ]
    S = PseudoMultifan(r, F.leaves + tail, len(F.leaves))
    pcert = _certify_pseudo(S, c, bound, budget, seed)
    if pcert.elementary is False:
        return [
            inst.report(cid, VACUOUS, group, args, premise="pseudo-elementary", **extra)
            for cid in CHECK_GROUPS[group]
        ]
    certified = mcert.is_maximum is True and pcert.certified
    note = "" if certified else f"premise sampled ({mcert.mode}/{pcert.mode})"
    a1 = _single(c, r)
    fan_missing = {col: s for s in F.leaves for col in c.missing(s)}
    tail_missing = {col: s for s in tail for col in c.missing(s)}

    def verdict(ok: bool) -> str:
        if not certified:
            return UNCERTIFIED
        return PASS if ok else FAIL

    out = []
    try:
        rots = find_rotation_partition(c, r, tail)
        ok = all(is_rotation(c, r, rot.vertices) for rot in rots)
        d = f"{len(rots)} rotations " + " ".join(str(list(rot.vertices)) for rot in rots)
    except NotAPermutation as exc:
        ok, d = False, str(exc)
    out.append(inst.report("pseudo_rotation_partition", verdict(ok), group, args, " ".join((d, note)).strip(), **extra))

    bad_b, bad_c, bad_d = [], [], []
    n_c = n_d = 0
    for sj in tail:
        for delta in sorted(c.missing(sj)):
            if not are_linked(c, a1, delta, sj, r):
                bad_b.append((sj, delta))
            for gamma, y in sorted(fan_missing.items()):
                n_c += 1
                ch = anchored_chain(c, gamma, delta, y)
                z = c.neighbor_via(r, gamma)
                if sj not in ch or r not in ch or z is None or not ch.meets_before(y, z, r):
                    bad_c.append((sj, delta, gamma))
            for dstar, y in sorted(tail_missing.items()):
                if dstar == delta:
                    continue
                n_d += 1
                ch = anchored_chain(c, delta, dstar, y)
                if sj not in ch:
                    bad_d.append((sj, delta, dstar, "chain misses s_j"))
                elif r not in ch and not chain_through(c, delta, dstar, r).is_cycle:
                    bad_d.append((sj, delta, dstar, "r off chain and its chain is a path"))
    out.append(
        inst.report(
            "pseudo_center_linked", verdict(not bad_b), group, args,
            (f"unlinked {bad_b[0]} " if bad_b else "") + note, **extra,
        )
    )
    out.append(
        inst.report(
            "pseudo_gamma_chain", verdict(not bad_c), group, args,
            (f"violation {bad_c[0]} " if bad_c else f"{n_c} chains ") + note, **extra,
        )
    )
    if n_d == 0:
        out.append(inst.report("pseudo_delta_chain", VACUOUS, group, args, premise="second-tail-color", **extra))
    else:
        out.append(
            inst.report(
                "pseudo_delta_chain", verdict(not bad_d), group, args,
                (f"violation {bad_d[0]} " if bad_d else f"{n_d} chains ") + note, **extra,
            )
        )
    return out


# -- lollipops -------------------------------------------------------------------


def _lollipop(inst: Instance, leaves, two_seed, u, x):
    """Typical relabeling and lollipop, or the unmet premise clause."""
    try:
        F = _fan_from_leaves(inst.coloring, inst.r, leaves)
        typ, tc = normalize_typical(F, inst.coloring, two_seed)
    except (InvalidTriple, NotElementary) as exc:
        return None, None, None, ("typical-multifan", str(exc))
    try:
        L = build_lollipop(typ, u, x, tc)
    except ConstraintViolation as exc:
        return typ, tc, None, (exc.clause, str(exc))
    return typ, tc, L, None


def check_lollipop_lemma(inst: Instance, leaves, two_seed: int, u: int, x: int) -> list[CheckReport]:
    group = "lollipop"
    args = {"leaves": list(leaves), "two_seed": two_seed, "u": u, "x": x}
    if not inst.hz:
        return _vacuous(inst, group, "coloring-triple", args)
    typ, tc, L, err = _lollipop(inst, leaves, two_seed, u, x)
    if err:
        return _vacuous(inst, group, err[0], args, err[1])
    if not L.ru_is_alpha1:
        return _vacuous(inst, group, "ru-alpha1", args)
    if not L.x_misses_alpha1:
        return _vacuous(inst, group, "x-misses-alpha1", args)
    r, d, alpha = typ.center, typ.delta, typ.alpha
    extra = {"alpha": alpha, "beta": typ.beta, "ux": L.ux_color}
    out = []
    tau = L.ux_color
    ok_a = tau != 1 and anchored_chain(tc, 1, tau, r).has_edge(u, x)
    out.append(inst.report("lollipop_spoke_chain", PASS if ok_a else FAIL, group, args, f"ux colored {tau}", **extra))
    later = CHECK_GROUPS[group][1:]
    if tau not in typ.two_inducing():
        out += [inst.report(cid, VACUOUS, group, args, premise="ux-two-inducing", **extra) for cid in later]
        return out

    cc = tc.copy()
    cc.set_color(u, x, 0)
    try:
        end = anchored_chain(cc, 1, tau, x).vertices[-1]
        ok_b, det_b = end == r, f"chain from x ends at {end}"
    except ValueError as exc:
        ok_b, det_b = False, str(exc)
    out.append(inst.report(later[0], PASS if ok_b else FAIL, group, args, det_b, **extra))

    def clause(cid: str, items: list[tuple[int, int, int, int]]) -> CheckReport:
        # items: (color a, color b, anchor, other vertex that must share the chain)
        if not items:
            return inst.report(cid, VACUOUS, group, args, premise="no-qualifying-color", **extra)
        for a, b, anchor, other in items:
            ch = anchored_chain(tc, a, b, anchor)
            if r not in ch or other not in ch:
                return inst.report(cid, FAIL, group, args, f"({a},{b}) chain at {anchor}", **extra)
        return inst.report(cid, PASS, group, args, f"{len(items)} colors", **extra)

    s1, sa = typ.s(1), typ.s(alpha)
    out.append(
        clause(later[1], [(dl, d, s1, typ.leaf_missing(dl)) for dl in range(tau + 1, alpha + 2)])
    )
    d_items, degenerate = [], 0
    for dl in typ.delta_inducing():
        anchor = typ.leaf_missing(dl)
        if anchor == sa:
            degenerate += 1
            continue
        d_items.append((dl, alpha + 1, anchor, sa))
    rep = clause(later[2], d_items)
    if degenerate and rep.verdict == VACUOUS:
        rep.premise = "distinct-anchors"
    out.append(rep)
    out.append(
        clause(later[3], [(dl, alpha + 1, sa, typ.leaf_missing(dl)) for dl in range(2, tau)])
    )
    return out


def check_nonadjacency(inst: Instance, leaves, two_seed: int, u: int, x: int) -> list[CheckReport]:
    group = "nonadjacency"
    args = {"leaves": list(leaves), "two_seed": two_seed, "u": u, "x": x}
    if not inst.hz:
        return _vacuous(inst, group, "coloring-triple", args)
    typ, tc, L, err = _lollipop(inst, leaves, two_seed, u, x)
    if err:
        return _vacuous(inst, group, err[0], args, err[1])
    if not L.premise:
        return _vacuous(inst, group, "ru-alpha1" if not L.ru_is_alpha1 else "x-misses-alpha1", args)
    g = tc.graph
    d, alpha, beta = typ.delta, typ.alpha, typ.beta
    extra = {"alpha": alpha, "beta": beta, "ux": L.ux_color}
    dind = set(typ.delta_inducing())
    out = []
    for cid, s in (("delta_edge_color_s1", typ.s(1)), ("delta_edge_color_salpha", typ.s(alpha))):
        if L.ux_color != d:
            out.append(inst.report(cid, VACUOUS, group, args, premise="ux-delta", **extra))
        elif not g.has_edge(u, s):
            out.append(inst.report(cid, VACUOUS, group, args, premise="u-adjacent-leaf", **extra))
        else:
            col = tc.color(u, s)
            out.append(
                inst.report(cid, PASS if col in dind else FAIL, group, args, f"u{s} colored {col}", **extra)
            )
    if alpha != beta:
        out.append(inst.report("nonadjacent_two_inducing_fan", VACUOUS, group, args, premise="two-inducing-fan", **extra))
        out.append(inst.report("nonadjacent_mu_neighbors", VACUOUS, group, args, premise="two-inducing-fan", **extra))
        return out
    if L.ux_color != d:
        out.append(inst.report("nonadjacent_two_inducing_fan", VACUOUS, group, args, premise="ux-delta", **extra))
    else:
        adj = [s for s in {typ.s(1), typ.s(alpha)} if g.has_edge(u, s)]
        out.append(
            inst.report(
                "nonadjacent_two_inducing_fan", FAIL if adj else PASS, group, args,
                f"u adjacent to {adj}" if adj else "", **extra,
            )
        )
    mu = L.ux_color
    if mu not in typ.two_inducing():
        out.append(inst.report("nonadjacent_mu_neighbors", VACUOUS, group, args, premise="ux-two-inducing", **extra))
    else:
        near = [typ.leaf_missing(mu)] + ([typ.s(mu)] if mu <= beta else [])
        adj = [s for s in near if g.has_edge(u, s)]
        out.append(
            inst.report(
                "nonadjacent_mu_neighbors", FAIL if adj else PASS, group, args,
                f"u adjacent to {adj}" if adj else f"mu={mu}", **extra,
            )
        )
    return out


# -- rotation lemma --------------------------------------------------------------


def forced_rotation(tc: PartialColoring, r: int, w1: int, stops: set[int], allowed: set[int], lo: int, hi: int):
    """Follow w_{i+1} = the neighbor of r via the missing color of w_i.

    Stops when the missing color is in ``stops``. Returns the sequence and
    an error string when the walk leaves the admissible range.
    """
    seq = [w1]
    while True:
        m = _single(tc, seq[-1])
        if m is None:
            return seq, f"{seq[-1]} misses {sorted(tc.missing(seq[-1]))}"
        if m in stops:
            return seq, None
        if not lo <= m <= hi:
            return seq, f"missing color {m} of {seq[-1]} outside [{lo},{hi}]"
        nxt = tc.neighbor_via(r, m)
        if nxt is None or nxt not in allowed or nxt in seq:
            return seq, f"color {m} leads from r to {nxt}, not a new tail vertex"
        seq.append(nxt)


def _chain_vertices_raw(g: Graph, k: int, col: Sequence[int], a: int, b: int, x: int) -> set[int]:
    pc = PartialColoring(g, k, col)
    return set(chain_through(pc, a, b, x).vertices)


def _kempe_one_reachable(
    tc: PartialColoring, r: int, x: int, budget: int
) -> tuple[list[tuple[int, ...]], bool]:
    """Colorings reachable by (1, *)-Kempe changes whose chains do not end at r or x.

    Returns the visited colorings and whether the search was exhaustive.
    """
    start = tc.colors()
    seen = {start}
    order = [start]
    queue = deque([start])
    g, k = tc.graph, tc.k
    while queue:
        col = queue.popleft()
        cur = PartialColoring(g, k, col, tc.uncolored_edge)
        for b in range(2, k + 1):
            done: set[frozenset] = set()
            for v in range(g.n):
                ch = chain_through(cur, 1, b, v)
                if not ch.edges or ch.edge_set in done:
                    continue
                done.add(ch.edge_set)
                if ch.is_path and (ch.vertices[0] in (r, x) or ch.vertices[-1] in (r, x)):
                    continue
                nxt = cur.copy()
                _swap_in_place(nxt, ch)
                key = nxt.colors()
                if key in seen:
                    continue
                if len(seen) >= budget:
                    return order, False
                seen.add(key)
                order.append(key)
                queue.append(key)
    return order, True


def _is_stable_raw(tc: PartialColoring, col: Sequence[int], vertices, edges) -> bool:
    cand = PartialColoring(tc.graph, tc.k, col, tc.uncolored_edge)
    return all(cand.missing(v) == tc.missing(v) for v in vertices) and all(
        cand.color(*e) == tc.color(*e) for e in edges
    )


def check_rotation_lemma(
    inst: Instance,
    leaves,
    two_seed: int,
    u: int,
    x: int,
    w1: int | None,
    bound: int = DEFAULT_EDGE_BOUND,
    budget: int = 2000,
    seed: int = 42,
) -> list[CheckReport]:
    """Existence of a stable (or near-stable) rotation from ``w1``.

    The conclusion is checked on the forced sequence. Only when it fails is
    the universally quantified hypothesis evaluated: it is falsified by a
    stable coloring whose (1, τ_1)-chain at r avoids every candidate vertex.
    """
    group = "rotation"
    args = {"leaves": list(leaves), "two_seed": two_seed, "u": u, "x": x, "w1": w1,
            "bound": bound, "budget": budget, "seed": seed}
    if not inst.hz:
        return _vacuous(inst, group, "coloring-triple", args)
    typ, tc, L, err = _lollipop(inst, leaves, two_seed, u, x)
    if err:
        return _vacuous(inst, group, err[0], args, err[1])
    if not L.ru_is_alpha1:
        return _vacuous(inst, group, "ru-alpha1", args)
    g = tc.graph
    r, d, alpha, beta = typ.center, typ.delta, typ.alpha, typ.beta
    fanset = set(typ.fan.leaves)
    closure = grow_multifan(tc, r, inst.s1, hz_mode=True, start=typ.fan.leaves)
    if len(closure.leaves) != len(typ.fan.leaves):
        # the argument needs every color of [β+2, Δ-1] on a tail spoke
        return _vacuous(inst, group, "maximal-multifan", args)
    tail = set(g.neighbors_of_degree(r, d - 1)) - fanset
    if w1 is None:
        return _vacuous(inst, group, "nonempty-tail", args)
    if w1 not in tail:
        return _vacuous(inst, group, "w1-in-tail", args)
    tau1 = tc.color(r, w1)
    if not beta + 2 <= tau1 <= d - 1:
        return _vacuous(inst, group, "tail-spoke-range", args)
    extra = {"alpha": alpha, "beta": beta, "tau1": tau1}
    fverts = set(typ.fan.vertices)
    candidates = set(range(g.n)) - fverts - {w1}
    out = []

    # stable rotation, hypothesis over all (F, φ)-stable colorings with ru fixed
    seq, why = forced_rotation(tc, r, w1, {tau1}, tail, beta + 2, d - 1)
    if why is None:
        bad = [w for w in seq if not are_linked(tc, 1, _single(tc, w), r, w)]
        why = f"{bad[0]} not linked to r" if bad else None
    if why is None:
        out.append(inst.report("rotation_stable", PASS, group, args, f"rotation {seq}", **extra))
    else:
        fixed = {e: tc.color(*e) for e in typ.fan.spokes if tc.color(*e)}
        fixed[edge_key(r, u)] = alpha + 1
        forbid = {v: tc.missing(v) for v in fverts}
        common = set(candidates)
        exhaustive = True
        try:
            for col in iter_colorings(g, d, skip=tc.uncolored_edge, fixed=fixed, forbid=forbid, bound=bound):
                common &= _chain_vertices_raw(g, d, col, 1, tau1, r)
                if not common:
                    break
        except TooLarge:
            exhaustive = False
            common &= set(chain_through(tc, 1, tau1, r).vertices)
            rng = random.Random(seed)
            for cur in stable_kempe_walk(fverts, set(typ.fan.spokes) | {edge_key(r, u)}, tc, budget, rng):
                common &= set(chain_through(cur, 1, tau1, r).vertices)
                if not common:
                    break
        if not common:
            out.append(inst.report("rotation_stable", PASS, group, args, f"hypothesis falsified; {why}", **extra))
        elif exhaustive:
            out.append(inst.report("rotation_stable", FAIL, group, args, f"hypothesis holds via {sorted(common)}; {why}", **extra))
        else:
            out.append(inst.report("rotation_stable", UNCERTIFIED, group, args, f"hypothesis not refuted by sampling; {why}", **extra))

    # near-stable variant, needs x to miss α+1
    if not L.x_misses_alpha1:
        out.append(inst.report("rotation_near_stable", VACUOUS, group, args, premise="x-misses-alpha1", **extra))
        return out
    seq, why = forced_rotation(tc, r, w1, {tau1, alpha + 1}, tail, beta + 2, d - 1)
    if why is None:
        last = _single(tc, seq[-1])
        bad = [w for w in seq[:-1] if not are_linked(tc, 1, _single(tc, w), r, w)]
        if last == tau1 and not are_linked(tc, 1, tau1, r, seq[-1]):
            bad.append(seq[-1])
        why = f"{bad[0]} not linked to r" if bad else None
    if why is None:
        kind = "near-stable" if _single(tc, seq[-1]) == alpha + 1 else "stable"
        out.append(inst.report("rotation_near_stable", PASS, group, args, f"{kind} sequence {seq}", **extra))
        return out
    lverts = fverts | {u, x}
    ledges = set(typ.fan.spokes) | {edge_key(r, u), edge_key(u, x)}
    reach, exhaustive = _kempe_one_reachable(tc, r, x, budget)
    common = set(candidates)
    for col in reach:
        if _is_stable_raw(tc, col, lverts, ledges):
            common &= _chain_vertices_raw(g, d, col, 1, tau1, r)
            if not common:
                break
    if not common:
        out.append(inst.report("rotation_near_stable", PASS, group, args, f"hypothesis falsified; {why}", **extra))
    elif exhaustive:
        out.append(inst.report("rotation_near_stable", FAIL, group, args, f"hypothesis holds via {sorted(common)}; {why}", **extra))
    else:
        out.append(inst.report("rotation_near_stable", UNCERTIFIED, group, args, f"reachable set truncated; {why}", **extra))
    return out


# -- instances ---------------------------------------------------------------------


def _is_canonical(col: Sequence[int]) -> bool:
    """True when colors appear in order 1, 2, ... along the edge list (one per palette orbit)."""
    top = 0
    for x in col:
        if x > top + 1:
            return False
        top = max(top, x)
    return True


def canonical_colors(col: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for x in col:
        if x and x not in remap:
            remap[x] = len(remap) + 1
        out.append(remap.get(x, 0))
    return tuple(out)


def triple_pairs(g: Graph, hz: bool) -> list[tuple[int, int]]:
    """(r, s1) pairs: r of degree Δ, s1 of degree Δ-1 for HZ-graphs, any neighbor otherwise."""
    d = g.max_degree
    centers = sorted(g.vertices_of_degree(d))
    if hz:
        pairs = [(r, s) for r in centers for s in sorted(g.neighbors_of_degree(r, d - 1))]
        if pairs:
            return pairs
    return [(r, s) for r in centers for s in sorted(g.neighbors(r))]


def iter_triple_colorings(
    g: Graph, r: int, s1: int, k: int, bound: int, samples: int, rng: random.Random
) -> Iterator[tuple[tuple[int, ...], bool]]:
    """Colorings of ``G - r s1`` up to palette permutation; flag says enumeration was exhaustive."""
    try:
        it = iter_colorings(g, k, skip=(r, s1), bound=bound)
        for col in it:
            if _is_canonical(col):
                yield col, True
        return
    except TooLarge:
        pass
    seen: set[tuple[int, ...]] = set()
    for _ in range(3 * samples):
        if len(seen) >= samples:
            break
        try:
            col = find_coloring(g, k, budget=200_000, skip=(r, s1), rng=rng)
        except BudgetExceeded:
            continue
        if col is None:
            return
        cur = PartialColoring(g, k, col, (r, s1))
        for _ in range(rng.randrange(0, 2 * g.m)):
            _random_kempe_step(cur, rng)
        key = canonical_colors(cur.colors())
        if key not in seen:
            seen.add(key)
            yield key, False


@dataclass(frozen=True)
class CorpusEntry:
    """A named graph; ``class2`` overrides the computed class (used for planted negative controls)."""

    name: str
    graph: Graph
    class2: bool | None = None


def _graph_level_vacuous(name: str, g: Graph, groups: Iterable[str], premise: str) -> list[CheckReport]:
    inst = {"graph": name, "graph_hash": graph_hash(g)}
    return [
        CheckReport(cid, dict(inst), VACUOUS, None, "", premise)
        for grp in groups
        for cid in CHECK_GROUPS[grp]
    ]


def lollipop_fans(inst: Instance) -> Iterator[tuple[tuple[int, ...], int]]:
    """(leaves, two_seed) for each typical orientation of the maximal fan and its 2-inducing prefix."""
    c = inst.coloring
    F = grow_multifan(c, inst.r, inst.s1, hz_mode=True)
    seen = set()
    for seed_color in sorted(c.missing(inst.s1)):
        try:
            typ, _ = normalize_typical(F, c, seed_color)
        except (InvalidTriple, NotElementary):
            continue
        for leaves in (typ.fan.leaves, typ.fan.leaves[: typ.alpha]):
            if (leaves, seed_color) not in seen:
                seen.add((leaves, seed_color))
                yield leaves, seed_color


def check_instance(inst: Instance, groups: Sequence[str], bound: int, budget: int, seed: int) -> list[CheckReport]:
    out: list[CheckReport] = []
    if "fan" in groups:
        out += check_fan_lemma(inst)
    if "crossfan" in groups:
        out += check_crossfan(inst)
    if not inst.hz:
        return out
    if "pseudo" in groups:
        out += check_pseudo_theorem(inst, bound, budget, seed)
    lolli = [grp for grp in ("lollipop", "rotation", "nonadjacency") if grp in groups]
    if not lolli:
        return out
    g, r = inst.graph, inst.r
    d = g.max_degree
    for leaves, two_seed in lollipop_fans(inst):
        tail = sorted(set(g.neighbors_of_degree(r, d - 1)) - set(leaves))
        for u in sorted(g.neighbors_of_degree(r, d)):
            for x in sorted(g.neighbors_of_degree(u, d - 1)):
                if x in leaves:
                    continue
                if "lollipop" in groups:
                    out += check_lollipop_lemma(inst, leaves, two_seed, u, x)
                if "nonadjacency" in groups:
                    out += check_nonadjacency(inst, leaves, two_seed, u, x)
                if "rotation" in groups:
                    for w1 in tail or [None]:
                        out += check_rotation_lemma(inst, leaves, two_seed, u, x, w1, bound, budget, seed)
    return out


def campaign_entry(
    entry: CorpusEntry,
    seed: int = 42,
    budget: int = 1000,
    bound: int = DEFAULT_EDGE_BOUND,
    groups: Sequence[str] | None = None,
) -> list[CheckReport]:
    """All reports for one corpus graph. Never raises on a per-instance problem."""
    groups = list(groups or CHECK_GROUPS)
    g = entry.graph
    try:
        cls = classify(g, criticality=False)
        class2 = cls.graph_class == 2
    except Exception as exc:  # noqa: BLE001 - a graph that cannot be classified is reported, not fatal
        return [CheckReport("classify", {"graph": entry.name, "graph_hash": graph_hash(g)}, UNCERTIFIED, None, str(exc))]
    if entry.class2 is not None:
        class2 = entry.class2
    if not class2 or g.m == 0:
        return _graph_level_vacuous(entry.name, g, groups, "class-2")
    core, _ = core_subgraph(g)
    hz = class2 and g.is_connected() and core.max_degree <= 2 and g.max_degree >= 3
    out: list[CheckReport] = []
    if not hz:
        out += _graph_level_vacuous(
            entry.name, g, [x for x in groups if x not in ("fan", "crossfan")], "coloring-triple"
        )
    pairs = triple_pairs(g, hz)
    k = g.max_degree
    per_pair = max(1, budget // max(1, len(pairs)))
    seen_any = False
    for r, s1 in pairs:
        rng = random.Random(f"{seed}:{entry.name}:{r}:{s1}")
        for col, _exh in iter_triple_colorings(g, r, s1, k, bound, per_pair, rng):
            seen_any = True
            c = PartialColoring(g, k, col, (r, s1))
            inst = Instance(entry.name, c, r, s1, class2, hz and g.degree(s1) == k - 1)
            try:
                out += check_instance(inst, groups, bound, budget, seed)
            except Exception as exc:  # noqa: BLE001 - campaign must survive one broken instance
                out.append(
                    CheckReport(
                        "internal_error", inst.descriptor(), FAIL, inst.witness("fan"), f"{type(exc).__name__}: {exc}"
                    )
                )
    if not seen_any:
        # no edge e with G - e Δ-colorable: every statement is about an empty set
        out += _graph_level_vacuous(entry.name, g, groups if hz else [x for x in groups if x in ("fan", "crossfan")], "colorable-minus-edge")
    return out


@dataclass
class CampaignResult:
    reports: list[CheckReport]
    header: dict

    @property
    def summary(self) -> dict[str, dict[str, int]]:
        counts: dict[str, Counter] = defaultdict(Counter)
        for rep in self.reports:
            counts[rep.check_id][rep.verdict] += 1
        return {cid: {v: counts[cid][v] for v in VERDICTS} for cid in sorted(counts)}

    def vacuous_premises(self) -> dict[str, dict[str, int]]:
        counts: dict[str, Counter] = defaultdict(Counter)
        for rep in self.reports:
            if rep.verdict == VACUOUS:
                counts[rep.check_id][rep.premise] += 1
        return {cid: dict(sorted(c.items())) for cid, c in sorted(counts.items())}

    @property
    def fails(self) -> list[CheckReport]:
        return [r for r in self.reports if r.verdict == FAIL]

    def write(self, path: str | Path, timestamp: bool = True) -> None:
        header = dict(self.header)
        if timestamp:
            header["created"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"header": header}, sort_keys=True) + "\n")
            for rep in self.reports:
                fh.write(rep.to_json() + "\n")
            fh.write(json.dumps({"summary": self.summary, "vacuous_premises": self.vacuous_premises()}, sort_keys=True) + "\n")


def run_campaign(
    corpus: Iterable[CorpusEntry | tuple[str, Graph]],
    seed: int = 42,
    budget: int = 1000,
    bound: int = DEFAULT_EDGE_BOUND,
    groups: Sequence[str] | None = None,
    out: str | Path | None = None,
    workers: int = 1,
    progress: Callable[[str], None] | None = None,
) -> CampaignResult:
    """Run every check group over every graph; the report order follows the corpus."""
    entries = [e if isinstance(e, CorpusEntry) else CorpusEntry(*e) for e in corpus]
    groups = list(groups or CHECK_GROUPS)
    unknown = set(groups) - set(CHECK_GROUPS)
    if unknown:
        raise ValueError(f"unknown check groups {sorted(unknown)}")
    reports: list[CheckReport] = []
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(workers) as pool:
            futures = [pool.submit(campaign_entry, e, seed, budget, bound, groups) for e in entries]
            for e, fut in zip(entries, futures):
                reports += fut.result()
                if progress:
                    progress(e.name)
    else:
        for e in entries:
            reports += campaign_entry(e, seed, budget, bound, groups)
            if progress:
                progress(e.name)
    header = {"seed": seed, "budget": budget, "bound": bound, "groups": groups, "graphs": [e.name for e in entries]}
    result = CampaignResult(reports, header)
    if out is not None:
        result.write(out)
    return result


# -- replay ----------------------------------------------------------------------------


_GROUP_RUNNERS: dict[str, Callable[..., list[CheckReport]]] = {
    "fan": check_fan_lemma,
    "crossfan": check_crossfan,
    "pseudo": check_pseudo_theorem,
    "lollipop": check_lollipop_lemma,
    "rotation": check_rotation_lemma,
    "nonadjacency": check_nonadjacency,
}


def instance_from_witness(w: dict) -> Instance:
    g = parse_graph6(w["graph6"])
    r, s1 = w["uncolored"]
    base = PartialColoring(g, w["k"], w["coloring"], (r, s1))
    c = base
    if w.get("script"):
        c = execute_script(base, OperationScript.from_text(w["script"]), check="end")[0]
        c.uncolored_edge = edge_key(r, s1)
    return Instance(w.get("name", "witness"), c, r, s1, w["class2"], w["hz"], base.colors(), w.get("script", ""))


def replay_witness(w: dict) -> list[CheckReport]:
    """Rebuild the instance of a fail witness and rerun its check group."""
    inst = instance_from_witness(w)
    return _GROUP_RUNNERS[w["group"]](inst, **w["args"])
