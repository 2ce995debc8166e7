"""Command line entry point: ``hzcolor <subcommand> ...``.

Exit codes: 0 ok, 1 other error, 2 parse error, 3 search budget exhausted,
4 check failures present. Errors are printed to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .coloring import OperationScript, PartialColoring, execute_script, format_step
from .config import RunConfig
from .errors import BudgetExceeded, HZColorError, ParseError, ScriptError
from .fans import grow_multifan, inducing_structure, normalize_typical
from .graph import Graph, edge_key
from .io import format_coloring, parse_coloring, parse_edge_list, parse_graph6_stream
from .search import find_coloring
from .solver import DEFAULT_NODE_BUDGET, chromatic_index, classify, vizing_color
from .verifier import CHECK_GROUPS, run_campaign

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_BUDGET, EXIT_FAILS = 0, 1, 2, 3, 4


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return all(tok.lstrip("-").isdigit() for tok in line.split())
    return True


def load_graphs(path: str) -> list[tuple[str, Graph]]:
    """Graphs from an edge-list file (one graph) or a graph6 file (one per line)."""
    text = Path(path).read_text()
    stem = Path(path).name
    if _looks_like_edge_list(text):
        return [(stem, parse_edge_list(text))]
    return [(f"{stem}:{i}", g) for i, g in enumerate(parse_graph6_stream(text.splitlines()))]


def load_graph(path: str) -> Graph:
    graphs = load_graphs(path)
    if len(graphs) != 1:
        raise ParseError(f"{path} holds {len(graphs)} graphs, expected one")
    return graphs[0][1]


def _cmd_color(args) -> int:
    g = load_graph(args.graph)
    sys.stdout.write(format_coloring(vizing_color(g)))
    return EXIT_OK


def _cmd_chi(args) -> int:
    g = load_graph(args.graph)
    try:
        print(chromatic_index(g, budget=args.budget, guard=None))
    except BudgetExceeded as exc:
        lo, hi = exc.interval
        print(f"[{lo},{hi}]")
        raise
    return EXIT_OK


def _cmd_classify(args) -> int:
    for path in args.graphs:
        for name, g in load_graphs(path):
            rec = classify(g, budget=args.budget, criticality=not args.no_criticality).as_dict()
            print(json.dumps({"graph": name, **rec}, sort_keys=True))
    return EXIT_OK


def _parse_edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"--edge expects 'u,v', got {text!r}") from None
    return u, v


def _cmd_fan(args) -> int:
    g = load_graph(args.graph)
    r, s1 = _parse_edge(args.edge)
    if not g.has_edge(r, s1):
        raise ParseError(f"{(r, s1)} is not an edge")
    k = g.max_degree
    if args.coloring:
        c = parse_coloring(Path(args.coloring).read_text(), g, k)
        if c.uncolored_edge != edge_key(r, s1):
            raise ParseError("the coloring must leave exactly the --edge uncolored")
    else:
        col = find_coloring(g, k, skip=(r, s1), rng=random.Random(args.seed))
        if col is None:
            raise HZColorError(f"G - {r}{s1} has no {k}-edge-coloring")
        c = PartialColoring(g, k, col, (r, s1))
    F = grow_multifan(c, r, s1, hz_mode=args.hz)
    out: dict = {
        "center": r,
        "leaves": list(F.leaves),
        "spoke_colors": [c.color(r, s) or None for s in F.leaves],
        "missing": {str(v): sorted(c.missing(v)) for v in F.vertices},
    }
    try:
        ind = inducing_structure(F, c)
        out["inducing"] = {
            str(seed): {"leaves": [F.leaves[i] for i in ind.sequences[seed]], "colors": list(ind.classes[seed])}
            for seed in ind.seeds
        }
    except HZColorError as exc:
        out["inducing"] = {"error": str(exc)}
    try:
        typ, tc = normalize_typical(F, c)
        out["typical"] = {
            "alpha": typ.alpha,
            "beta": typ.beta,
            "leaves": list(typ.fan.leaves),
            "color_map": {str(a): b for a, b in sorted(typ.color_map.items())},
        }
    except HZColorError as exc:
        out["typical"] = {"error": str(exc)}
    out["coloring"] = format_coloring(c).splitlines()
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = RunConfig(
        seed=args.seed,
        bound=args.bound,
        budget=args.budget,
        corpus=tuple(args.corpus),
        output=args.out,
        checks=tuple(args.checks.split(",")) if args.checks else tuple(CHECK_GROUPS),
        workers=args.workers,
    )
    corpus = [item for path in cfg.corpus for item in load_graphs(path)]
    res = run_campaign(corpus, cfg.seed, cfg.budget, cfg.bound, cfg.checks, cfg.output, cfg.workers)
    print(json.dumps({"summary": res.summary, "vacuous_premises": res.vacuous_premises()}, sort_keys=True))
    return EXIT_FAILS if res.fails else EXIT_OK


def _cmd_replay(args) -> int:
    g = load_graph(args.graph)
    c = parse_coloring(Path(args.coloring).read_text(), g, args.k or g.max_degree)
    script = OperationScript.from_text(Path(args.script).read_text())
    final, trace = execute_script(c, script, check=args.check)
    for st in trace:
        changes = " ".join(f"{v}:{list(a)}->{list(b)}" for v, (a, b) in st.missing_delta.items())
        notes = f" [{','.join(st.notes)}]" if st.notes else ""
        print(f"step {st.index}: {format_step(st.step)}{notes}  {changes}".rstrip())
    sys.stdout.write(format_coloring(final))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hzcolor", description="Edge-coloring tools for class-2 graph structure")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("color", help="print a proper (Δ+1)-edge-coloring")
    sp.add_argument("graph")
    sp.set_defaults(func=_cmd_color)

    sp = sub.add_parser("chi", help="print the exact chromatic index")
    sp.add_argument("graph")
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=_cmd_chi)

    sp = sub.add_parser("classify", help="JSON classification record per graph")
    sp.add_argument("graphs", nargs="+")
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--no-criticality", action="store_true")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("fan", help="grow a multifan for a coloring-triple and describe it")
    sp.add_argument("graph")
    sp.add_argument("--edge", required=True, help="the uncolored edge r,s1")
    sp.add_argument("--coloring")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--no-hz", dest="hz", action="store_false", help="allow leaves of any degree")
    sp.set_defaults(func=_cmd_fan)

    sp = sub.add_parser("verify", help="run the statement checks over a corpus")
    sp.add_argument("corpus", nargs="+")
    sp.add_argument("--checks", help=f"comma list from {','.join(CHECK_GROUPS)}")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--budget", type=int, default=1000)
    sp.add_argument("--bound", type=int, default=14)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("replay", help="run an operation script with a per-step trace")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("script")
    sp.add_argument("-k", type=int, help="palette size (default Δ)")
    sp.add_argument("--check", choices=("step", "end"), default="end")
    sp.set_defaults(func=_cmd_replay)
    return p


def _fail(code: int, exc: Exception, **extra) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), **extra}
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(EXIT_PARSE, exc, line=exc.line)
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET, exc, interval=list(exc.interval) if exc.interval else None)
    except ScriptError as exc:
        return _fail(EXIT_ERROR, exc, step=exc.step)
    except (HZColorError, OSError, ValueError) as exc:
        return _fail(EXIT_ERROR, exc)


if __name__ == "__main__":
    sys.exit(main())
