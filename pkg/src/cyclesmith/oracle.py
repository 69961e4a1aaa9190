"""Exact brute-force values of the three part-count metrics on small
graphs: minimum cycles+edges decomposition (ce), minimum 2-regular+edges
decomposition (re), minimum cycles+edges cover (gce).

Every result carries a witness certificate that verifies, and exhaustive
branch-and-bound guarantees no smaller certificate exists.  Limits are
hard: the oracle raises LimitExceeded rather than return an unproven
value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _kernels as K
from .errors import LimitExceeded
from .graph import Graph
from .limits import Limits, default_limits
from .verify import Cover, Decomposition, Part, PartKind


@dataclass
class OracleResult:
    metric: str
    value: int
    witness: object  # Decomposition or Cover
    nodes: int
    elapsed: float
    cycle_count: int


def _edge_arrays(g: Graph):
    us = [u for u, _ in g.edges]
    vs = [v for _, v in g.edges]
    return us, vs


def _check_size(g: Graph, limits: Limits):
    if g.m > limits.oracle_max_edges:
        raise LimitExceeded(
            f"m={g.m} exceeds oracle_max_edges={limits.oracle_max_edges}"
        )


def _mask_to_ids(mask: int):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


def exact_ce(g: Graph, limits: Limits | None = None) -> OracleResult:
    """Minimum number of parts in a cycles-and-edges decomposition,
    computed as m minus the best total (|C|-1) over edge-disjoint cycle
    packings."""
    limits = limits or default_limits()
    _check_size(g, limits)
    us, vs = _edge_arrays(g)
    t0 = time.perf_counter()
    count, chosen, ncycles, nodes, completed = K.ce_exact(
        g.n, us, vs, limits.oracle_max_cycles, limits.oracle_node_cap
    )
    if count < 0:
        raise LimitExceeded(f"more than {limits.oracle_max_cycles} cycles")
    if not completed:
        raise LimitExceeded(f"search node cap {limits.oracle_node_cap} hit")
    used = set()
    parts = []
    for mask in chosen:
        ids = _mask_to_ids(mask)
        used |= ids
        parts.append(Part(PartKind.CYCLE, ids))
    for eid in range(g.m):
        if eid not in used:
            parts.append(Part(PartKind.SINGLE_EDGE, frozenset([eid])))
    witness = Decomposition(parts, {"method": "oracle-ce"})
    assert len(parts) == count
    return OracleResult("ce", count, witness, nodes, time.perf_counter() - t0, ncycles)


def _two_regular_candidates(g: Graph, limits: Limits):
    """Edge-disjoint packing candidates for re: every simple cycle plus
    every union of pairwise vertex-disjoint cycles."""
    enum = K.simple_cycles(g.n, *_edge_arrays(g), limits.oracle_max_cycles)
    if enum is None:
        raise LimitExceeded(f"more than {limits.oracle_max_cycles} cycles")
    masks, sizes, vmasks = enum
    cand_masks = list(masks)
    cand_sizes = list(sizes)
    cap = limits.oracle_max_cycles

    def combine(idx, emask, vmask, size):
        if len(cand_masks) > cap:
            raise LimitExceeded(f"more than {cap} 2-regular candidates")
        for j in range(idx, len(masks)):
            if vmasks[j] & vmask:
                continue
            em = emask | masks[j]
            cand_masks.append(em)
            cand_sizes.append(size + sizes[j])
            combine(j + 1, em, vmask | vmasks[j], size + sizes[j])

    for i in range(len(masks)):
        combine(i + 1, masks[i], vmasks[i], sizes[i])
    return cand_masks, cand_sizes, len(masks)


def exact_re(g: Graph, limits: Limits | None = None) -> OracleResult:
    """Minimum number of parts in a 2-regular-and-edges decomposition;
    candidates are unions of vertex-disjoint cycles."""
    limits = limits or default_limits()
    _check_size(g, limits)
    t0 = time.perf_counter()
    cand_masks, cand_sizes, ncycles = _two_regular_candidates(g, limits)
    gain, chosen, nodes, completed = K.max_packing(
        cand_masks, cand_sizes, g.m, limits.oracle_node_cap
    )
    if not completed:
        raise LimitExceeded(f"search node cap {limits.oracle_node_cap} hit")
    count = g.m - gain
    used = set()
    parts = []
    for i in chosen:
        ids = _mask_to_ids(cand_masks[i])
        used |= ids
        parts.append(Part(PartKind.TWO_REGULAR, ids))
    for eid in range(g.m):
        if eid not in used:
            parts.append(Part(PartKind.SINGLE_EDGE, frozenset([eid])))
    witness = Decomposition(parts, {"method": "oracle-re"})
    assert len(parts) == count
    return OracleResult("re", count, witness, nodes, time.perf_counter() - t0, ncycles)


def exact_gce(g: Graph, limits: Limits | None = None) -> OracleResult:
    """Minimum number of parts in a cycles-and-edges cover (overlaps
    allowed): branch-and-bound set cover over the enumerated cycles."""
    limits = limits or default_limits()
    _check_size(g, limits)
    us, vs = _edge_arrays(g)
    t0 = time.perf_counter()
    count, chosen, singles, ncycles, nodes, completed = K.gce_exact(
        g.n, us, vs, limits.oracle_max_cycles, limits.oracle_node_cap
    )
    if ncycles < 0:
        raise LimitExceeded(f"more than {limits.oracle_max_cycles} cycles")
    if not completed:
        raise LimitExceeded(f"search node cap {limits.oracle_node_cap} hit")
    parts = [Part(PartKind.CYCLE, _mask_to_ids(mask)) for mask in chosen]
    for eid in _mask_to_ids(singles):
        parts.append(Part(PartKind.SINGLE_EDGE, frozenset([eid])))
    witness = Cover(parts, {"method": "oracle-gce"})
    assert len(parts) == count
    return OracleResult("gce", count, witness, nodes, time.perf_counter() - t0, ncycles)
