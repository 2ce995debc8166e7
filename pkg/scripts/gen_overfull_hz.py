"""Sample small overfull HZ-graphs: connected, overfull, max-degree core of degree <= 2.

Overfull forces class 2, so these are HZ-graphs without any coloring search.
For odd n, k vertices of degree Δ and j = n - k of degree Δ-1 give an overfull
graph exactly when k > n - Δ; an induced core of max degree 2 also needs
k(Δ-2) <= j(Δ-1). Graphs are drawn with that degree sequence and deduplicated
up to isomorphism.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import defaultdict

import networkx as nx

from hzcolor.graph import Graph, hz_structure_check, is_overfull
from hzcolor.io import to_graph6


def parameter_triples(nmax: int):
    for n in range(5, nmax + 1, 2):
        for delta in range(3, n):
            for j in range(1, n):
                k = n - j
                if k > n - delta and k * (delta - 2) <= j * (delta - 1) and (k * delta + j * (delta - 1)) % 2 == 0:
                    yield n, delta, k


def sample(n: int, delta: int, k: int, tries: int, rng: random.Random) -> list[nx.Graph]:
    degrees = [delta] * k + [delta - 1] * (n - k)
    found: dict[str, list[nx.Graph]] = defaultdict(list)
    out = []
    for _ in range(tries):
        try:
            h = nx.random_degree_sequence_graph(degrees, seed=rng.randrange(2**32), tries=20)
        except nx.NetworkXError:
            continue
        g = Graph.from_edges(n, h.edges)
        if not (g.is_connected() and is_overfull(g) and hz_structure_check(g).is_hz_candidate):
            continue
        bucket = found[nx.weisfeiler_lehman_graph_hash(h)]
        if not any(nx.is_isomorphic(h, o) for o in bucket):
            bucket.append(h)
            out.append(h)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=9)
    ap.add_argument("--tries", type=int, default=400)
    ap.add_argument("--max-edges", type=int, default=24)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    lines = []
    for n, delta, k in parameter_triples(args.nmax):
        if (k * delta + (n - k) * (delta - 1)) // 2 > args.max_edges:
            continue
        graphs = sample(n, delta, k, args.tries, rng)
        print(f"n={n} Δ={delta} k={k}: {len(graphs)}", file=sys.stderr)
        lines += [to_graph6(Graph.from_edges(n, h.edges)) for h in graphs]
    text = "".join(ln + "\n" for ln in lines)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
