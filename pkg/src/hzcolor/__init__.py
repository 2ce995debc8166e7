"""Edge-coloring toolkit for class-2 graphs with a sparse max-degree core."""

from .coloring import PartialColoring, kempe_swap, shift, swap_sequence
from .graph import Graph, core_subgraph, is_overfull
from .solver import chromatic_index, classify, vizing_color

__all__ = [
    "Graph",
    "PartialColoring",
    "chromatic_index",
    "classify",
    "core_subgraph",
    "is_overfull",
    "kempe_swap",
    "shift",
    "swap_sequence",
    "vizing_color",
]
