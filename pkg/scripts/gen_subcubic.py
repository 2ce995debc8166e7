"""Enumerate connected graphs with maximum degree exactly 3 up to a vertex bound.

Every connected graph has a vertex whose removal keeps it connected, so the
connected subcubic graphs on n vertices are exactly the one-vertex extensions
of those on n-1 vertices. Isomorphs are removed by bucketing on a
Weisfeiler-Lehman hash and confirming with an exact isomorphism test.
Output is graph6, one graph per line, ordered by (n, m, first appearance).
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from collections import defaultdict

import networkx as nx

from hzcolor.graph import Graph
from hzcolor.io import to_graph6


def _key(h: nx.Graph) -> str:
    return nx.weisfeiler_lehman_graph_hash(h, iterations=3)


def subcubic_connected(nmax: int) -> dict[int, list[nx.Graph]]:
    """All connected graphs with max degree <= 3, keyed by order."""
    levels = {1: [nx.empty_graph(1)]}
    for n in range(2, nmax + 1):
        buckets: dict[str, list[nx.Graph]] = defaultdict(list)
        out = []
        for h in levels[n - 1]:
            free = [v for v in h if h.degree(v) < 3]
            for k in (1, 2, 3):
                for nbrs in itertools.combinations(free, k):
                    cand = h.copy()
                    cand.add_edges_from((n - 1, v) for v in nbrs)
                    bucket = buckets[_key(cand)]
                    if not any(nx.is_isomorphic(cand, other) for other in bucket):
                        bucket.append(cand)
                        out.append(cand)
        levels[n] = out
    return levels


def max_degree_three(nmax: int) -> list[nx.Graph]:
    levels = subcubic_connected(nmax)
    graphs = [h for n in sorted(levels) for h in levels[n] if max(dict(h.degree).values(), default=0) == 3]
    return sorted(graphs, key=lambda h: (h.number_of_nodes(), h.number_of_edges()))


def as_graph(h: nx.Graph) -> Graph:
    return Graph.from_edges(h.number_of_nodes(), h.edges)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=9)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    t0 = time.perf_counter()
    graphs = max_degree_three(args.nmax)
    lines = "".join(to_graph6(as_graph(h)) + "\n" for h in graphs)
    if args.out == "-":
        sys.stdout.write(lines)
    else:
        with open(args.out, "w") as fh:
            fh.write(lines)
    counts = defaultdict(int)
    for h in graphs:
        counts[h.number_of_nodes()] += 1
    print(f"{len(graphs)} graphs {dict(counts)} in {time.perf_counter() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
