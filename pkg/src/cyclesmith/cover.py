"""Covers by cycles and edges: at most n-2 parts for any connected
non-tree, via block recursion, the even/forest dichotomy and an exact
minimum cycle cover of even graphs at small scale.

Recursion scheme: split at cut vertices (the cover of the whole is the
union of the sides' covers); a 2-connected piece either is K4 (covered by
two fixed 4-cycles) or splits as an even subgraph H plus a forest F with
at most n-3 edges.  F's edges are paired up, each pair covered by one
cycle through both (2-connectedness), and H is covered by at most
floor((n-1)/2) cycles.
"""

from __future__ import annotations

from .errors import NotEven
from .graph import Graph, cut_vertices_and_blocks, cycle_through_two_edges, subgraph_with_map
from .even_split import SplitClass, classify_n3
from .limits import Limits, default_limits
from .verify import Cover, Part, PartKind
from . import _kernels as K


def even_cycle_cover(g: Graph, limits: Limits | None = None) -> Cover:
    """Cycle cover of an even graph; minimum cardinality (branch and
    bound over the cycle space) up to ``cover_exact_max_edges``, above
    that a cycle-peel fallback flagged bound_guaranteed=False.  The exact
    cover is checked against the floor((n-1)/2) bound."""
    limits = limits or default_limits()
    odd = g.odd_vertices()
    if odd:
        raise NotEven(f"odd-degree vertices {odd}")
    if g.m == 0:
        return Cover([], {"method": "even-cycle-cover", "bound_guaranteed": True})
    parts, guaranteed, minimum = _even_cover_edges(g, range(g.m), limits)
    return Cover(
        parts,
        {
            "method": "even-cycle-cover",
            "bound_guaranteed": guaranteed,
            "minimum": minimum,
        },
    )


def _even_cover_edges(g: Graph, edge_ids, limits: Limits):
    """Cycle parts covering the (even) edge subset.  Returns
    (parts, bound_guaranteed, is_minimum)."""
    ids = sorted(edge_ids)
    sub, _vmap, emap = subgraph_with_map(g, ids)
    if len(ids) <= limits.cover_exact_max_edges:
        us = [u for u, _ in sub.edges]
        vs = [v for _, v in sub.edges]
        count, chosen, _nc, _nodes, completed = K.fan_exact(
            sub.n, us, vs, limits.oracle_max_cycles, limits.oracle_node_cap
        )
        if count >= 0 and completed:
            parts = [
                Part(PartKind.CYCLE, frozenset(emap[e] for e in _mask_ids(mask)))
                for mask in chosen
            ]
            fan_bound = (g.n - 1) // 2
            if count > fan_bound:
                raise AssertionError(
                    f"exact cycle cover of an even graph used {count} cycles, "
                    f"above floor((n-1)/2) = {fan_bound}"
                )
            return parts, True, True
    # fallback: peel a cycle decomposition (even graphs always decompose)
    from .even_split import _find_cycle_edges  # deterministic DFS helper

    remaining = set(range(sub.m))
    verts = list(range(sub.n))
    parts = []
    while remaining:
        cyc = _find_cycle_edges(sub, remaining, verts)
        assert cyc is not None, "even edge set failed to peel into cycles"
        parts.append(Part(PartKind.CYCLE, frozenset(emap[e] for e in cyc)))
        remaining -= set(cyc)
    return parts, False, False


def _mask_ids(mask: int):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def cover_cycles_edges(g: Graph, limits: Limits | None = None) -> Cover:
    """Cover by cycles and single edges: at most n-2 parts when the graph
    is connected and not a tree (guaranteed while every even piece stays
    within the exact-cover threshold; otherwise the certificate is still
    valid and bound_guaranteed reports False), n - #components single
    edges on forests."""
    limits = limits or default_limits()
    parts = []
    trace = []
    guaranteed = [True]
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        cset = set(comp)
        eids = [eid for eid, (u, _) in enumerate(g.edges) if u in cset]
        if eids:
            _cover_connected(g, sorted(comp), eids, limits, parts, trace, guaranteed)
    return Cover(
        parts,
        {
            "method": "cover-cycles-edges",
            "bound_guaranteed": guaranteed[0],
            "trace": trace,
        },
    )


def _cover_connected(g, vids, eids, limits, parts, trace, guaranteed):
    """Appends cover parts for one connected subgraph; returns its part
    count (the recursion identity count = count_1 + count_2 at every cut
    split is recorded in the trace)."""
    if len(eids) <= len(vids) - 1:
        for e in sorted(eids):
            parts.append(Part(PartKind.SINGLE_EDGE, frozenset([e])))
        return len(eids)
    sub, vmap, emap = subgraph_with_map(g, eids)
    cuts, _blocks = cut_vertices_and_blocks(sub)
    if cuts:
        v = cuts[0]
        comps = _components_without(sub, v)
        side = set(comps[0]) | {v}
        in_side = [e for e, (a, b) in enumerate(sub.edges) if a in side and b in side]
        eids1 = [emap[e] for e in in_side]
        side_set = set(in_side)
        eids2 = [emap[e] for e in range(sub.m) if e not in side_set]
        vids1 = sorted(vmap[x] for x in side)
        vids2 = sorted(set(vids) - (set(vids1) - {vmap[v]}))
        c1 = _cover_connected(g, vids1, eids1, limits, parts, trace, guaranteed)
        c2 = _cover_connected(g, vids2, eids2, limits, parts, trace, guaranteed)
        trace.append(
            {"cut": vmap[v], "n1": len(vids1), "n2": len(vids2), "c1": c1, "c2": c2}
        )
        return c1 + c2
    # 2-connected with a cycle
    cls = classify_n3(sub)
    if cls.classification is SplitClass.TYPE_II:
        a, b, c, d = cls.witness  # the piece is K4: two 4-cycles cover it
        cyc1 = ((a, b), (b, c), (c, d), (a, d))
        cyc2 = ((a, c), (c, b), (b, d), (d, a))
        for cyc in (cyc1, cyc2):
            parts.append(
                Part(PartKind.CYCLE,
                     frozenset(emap[sub.edge_id(x, y)] for x, y in cyc))
            )
        return 2
    count = 0
    forest = sorted(cls.forest_edges)
    for i in range(0, len(forest) - 1, 2):
        cyc = cycle_through_two_edges(sub, forest[i], forest[i + 1])
        parts.append(Part(PartKind.CYCLE, frozenset(emap[e] for e in cyc)))
        count += 1
    if len(forest) % 2:
        parts.append(Part(PartKind.SINGLE_EDGE, frozenset([emap[forest[-1]]])))
        count += 1
    if cls.even_edges:
        hparts, hguaranteed, _minimum = _even_cover_edges(sub, cls.even_edges, limits)
        for p in hparts:
            parts.append(Part(p.kind, frozenset(emap[e] for e in p.edges)))
        count += len(hparts)
        if not hguaranteed:
            guaranteed[0] = False
    return count


def _components_without(sub: Graph, v: int):
    seen = {v}
    comps = []
    for s in range(sub.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in sub.adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps
