"""Exhaustive labeled-graph corpora.

Graphs on n vertices are encoded as pair masks (bit ``v*(v-1)//2 + u`` for
edge uv, u < v, the graph6 bit order) so the kernels can filter millions of
candidates quickly; survivors are materialised as Graph values here.
"""

from __future__ import annotations

from functools import lru_cache

from . import _kernels as K
from .errors import InvalidParams
from .graph import Graph

FILTER_FLAGS = {
    "all": 0,
    "connected": K.CONNECTED,
    "maxdeg4": K.CONNECTED | K.MAXDEG4,
    "clawfree": K.CONNECTED | K.CLAWFREE,
    "even": K.CONNECTED | K.EVEN,
    "nontree": K.CONNECTED | K.NONTREE,
    "cyclic": K.CONNECTED | K.NONTREE,
}


def total_masks(n: int) -> int:
    """2^(n choose 2) labeled graphs on n vertices."""
    return 1 << (n * (n - 1) // 2)


@lru_cache(maxsize=None)
def _lex_pairs(n: int):
    """Edge pairs in lexicographic order with their pair-mask bit position."""
    return tuple(
        ((u, v), v * (v - 1) // 2 + u)
        for u in range(n)
        for v in range(u + 1, n)
    )


def mask_to_graph(n: int, mask: int) -> Graph:
    edges = [pair for pair, bit in _lex_pairs(n) if mask >> bit & 1]
    return Graph._from_sorted_edges(n, edges)


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges:
        mask |= 1 << (v * (v - 1) // 2 + u)
    return mask


def iter_masks(n: int, filter_name: str, chunk: int = 1 << 18):
    """Pair masks of the labeled graphs on n vertices passing the filter,
    ascending.  The special filter "even" walks the cycle space (2^C(n-1,2)
    candidates) instead of all 2^C(n,2) masks; its order is the Gray-code
    walk, still deterministic."""
    if filter_name not in FILTER_FLAGS:
        raise InvalidParams(f"unknown filter {filter_name!r}; "
                            f"choose from {sorted(FILTER_FLAGS)}")
    if filter_name == "even":
        size = K.cycle_space_size(n)
        for start in range(0, size, chunk):
            yield from K.connected_even_slice(n, start, min(start + chunk, size))
        return
    flags = FILTER_FLAGS[filter_name]
    size = total_masks(n)
    for start in range(0, size, chunk):
        yield from K.filter_graph_masks(n, start, min(start + chunk, size), flags)


def iter_graphs(n: int, filter_name: str, chunk: int = 1 << 18):
    for mask in iter_masks(n, filter_name, chunk):
        yield mask_to_graph(n, mask)
