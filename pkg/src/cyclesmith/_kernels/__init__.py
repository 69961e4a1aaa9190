"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``CYCLESMITH_PURE_KERNELS=1`` to force the pure implementation (used by
the benchmark and the equivalence tests).  The compiled core only handles
graphs whose masks fit a machine word (pair masks need n <= 11, edge-id
masks need m <= 64); calls outside that range are routed to the pure code
transparently.
"""

import importlib
import os

from . import pure

_fast = None
if os.environ.get("CYCLESMITH_PURE_KERNELS", "") != "1":
    try:
        _fast = importlib.import_module("._fast", __name__)
    except ImportError:
        _fast = None

USING_COMPILED = _fast is not None

CONNECTED = pure.CONNECTED
MAXDEG4 = pure.MAXDEG4
EVEN = pure.EVEN
CLAWFREE = pure.CLAWFREE
NONTREE = pure.NONTREE

pair_index = pure.pair_index
adjacency_masks = pure.adjacency_masks
cycle_space_size = pure.cycle_space_size


def _route(name, fits):
    pure_fn = getattr(pure, name)
    if _fast is None:
        return pure_fn
    fast_fn = getattr(_fast, name)

    def dispatch(*args):
        if fits(*args):
            return fast_fn(*args)
        return pure_fn(*args)

    dispatch.__name__ = name
    return dispatch


def _pairs_fit(n, *_rest):
    return n <= 11


def _edges_fit_simple_cycles(n, us, vs, limit):
    return n <= 64 and len(us) <= 64


def _edges_fit_packing(masks, sizes, m, node_cap):
    return m <= 64


def _edges_fit_cover(masks, sizes, m, allow_singles, node_cap):
    return m <= 64


def _edges_fit_composite(n, us, vs, cycle_limit, node_cap):
    return n <= 64 and len(us) <= 64


mask_is_connected = _route("mask_is_connected", _pairs_fit)
mask_max_degree = _route("mask_max_degree", _pairs_fit)
mask_all_even = _route("mask_all_even", _pairs_fit)
mask_has_claw = _route("mask_has_claw", _pairs_fit)
mask_is_k4trees = _route("mask_is_k4trees", _pairs_fit)
filter_graph_masks = _route("filter_graph_masks", _pairs_fit)
connected_even_slice = _route("connected_even_slice", _pairs_fit)
simple_cycles = _route("simple_cycles", _edges_fit_simple_cycles)
max_packing = _route("max_packing", _edges_fit_packing)
min_cover = _route("min_cover", _edges_fit_cover)
ce_exact = _route("ce_exact", _edges_fit_composite)
gce_exact = _route("gce_exact", _edges_fit_composite)
fan_exact = _route("fan_exact", _edges_fit_composite)
