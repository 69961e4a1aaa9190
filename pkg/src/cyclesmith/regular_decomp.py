"""Decompose even graphs into exactly max_degree/2 two-regular subgraphs,
with the 2-factorization and girth-bound corollaries for 2k-regular inputs.

Pipeline, per component: Euler circuit -> bipartite transition multigraph
(out-copy v1 joined to in-copy u2 for every circuit step v->u, plus
(max_degree - deg v)/2 slack edges v1-v2 making it (max_degree/2)-regular)
-> repeated perfect matchings; the real edges of each matching form one
2-regular part.  A vertex slack-matched in some round is simply absent
from that part.  Each original edge appears in the circuit once with one
orientation, so no part can pick up a repeated edge.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotEven, NotRegularEven, PreconditionError
from .graph import (
    Graph,
    connected_components,
    eulerian_circuit,
    girth,
    subgraph_with_map,
)
from .verify import Decomposition, Part, PartKind


def _perfect_matching(nloc, adj, alive):
    """One perfect matching over the surviving edge instances.

    adj[v] lists (instance index, right vertex) deterministically; Kuhn's
    augmenting paths in ascending left-vertex order.  Returns the matched
    instance per left vertex."""
    match_l_inst = [-1] * nloc
    match_r_left = [-1] * nloc
    match_r_inst = [-1] * nloc

    def augment(v, visited):
        for inst_idx, r in adj[v]:
            if not alive[inst_idx] or r in visited:
                continue
            visited.add(r)
            if match_r_left[r] == -1 or augment(match_r_left[r], visited):
                match_l_inst[v] = inst_idx
                match_r_left[r] = v
                match_r_inst[r] = inst_idx
                return True
        return False

    for v in range(nloc):
        if not augment(v, set()):
            raise AssertionError("regular bipartite multigraph lost its matching")
    return match_l_inst


def _two_regular_rounds(g: Graph, delta: int):
    """Edge-id sets of the delta/2 parts."""
    rounds = delta // 2
    parts = [set() for _ in range(rounds)]
    for comp in connected_components(g):
        cset = set(comp)
        comp_edges = [eid for eid, (u, _) in enumerate(g.edges) if u in cset]
        if not comp_edges:
            continue
        sub, _vmap, emap = subgraph_with_map(g, comp_edges)
        walk = eulerian_circuit(sub, 0)
        nloc = sub.n
        # instance = (left out-copy, right in-copy, original edge id or None)
        instances = []
        for k, eid in enumerate(walk.edge_ids):
            v, u = walk.vertices[k], walk.vertices[k + 1]
            instances.append((v, u, emap[eid]))
        for v in range(nloc):
            for _ in range((delta - sub.degree(v)) // 2):
                instances.append((v, v, None))
        adj = [[] for _ in range(nloc)]
        for i, (v, u, _orig) in enumerate(instances):
            adj[v].append((i, u))
        for lst in adj:
            lst.sort(key=lambda t: (t[1], t[0]))
        alive = [True] * len(instances)
        for r in range(rounds):
            for inst_idx in _perfect_matching(nloc, adj, alive):
                alive[inst_idx] = False
                orig = instances[inst_idx][2]
                if orig is not None:
                    parts[r].add(orig)
    return parts


def even_to_two_regular(g: Graph) -> Decomposition:
    """Exactly max_degree/2 two-regular parts partitioning an even graph's
    edge set.  An edgeless graph yields the empty decomposition."""
    odd = g.odd_vertices()
    if odd:
        raise NotEven(f"odd-degree vertices {odd}")
    delta = g.max_degree()
    if delta == 0:
        return Decomposition([], {"method": "even2reg"})
    parts = _two_regular_rounds(g, delta)
    return Decomposition(
        [Part(PartKind.TWO_REGULAR, frozenset(p)) for p in parts],
        {"method": "even2reg"},
    )


def petersen_two_factorization(g: Graph) -> Decomposition:
    """k spanning 2-regular parts (2-factors) of a 2k-regular graph.  With
    every degree equal there are no slack edges, so each matching covers
    every vertex with a real edge."""
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) != 1:
        raise NotRegularEven(f"degrees {sorted(degs)} are not all equal")
    d = degs.pop()
    if d % 2 or d == 0:
        raise NotRegularEven(f"degree {d} is not positive even")
    decomp = even_to_two_regular(g)
    spanning = []
    for part in decomp.parts:
        verts = {x for eid in part.edges for x in g.edges[eid]}
        spanning.append(len(verts) == g.n)
    if not all(spanning):
        raise AssertionError("2-factorization produced a non-spanning part")
    decomp.meta = {"method": "two-factorization", "spanning": spanning}
    return decomp


def girth_bound_decompose(g: Graph):
    """Cycle decomposition of a 2k-regular graph with at most k*n/girth
    cycles: split each 2-factor into its cycle components.  Returns the
    decomposition and the bound as an exact fraction."""
    if g.m == 0:
        raise PreconditionError("girth bound needs a graph with a cycle")
    factors = petersen_two_factorization(g)
    k = len(factors.parts)
    parts = []
    for factor in factors.parts:
        for cyc in _cycle_components(g, factor.edges):
            parts.append(Part(PartKind.CYCLE, frozenset(cyc)))
    bound = Fraction(k * g.n, int(girth(g)))
    decomp = Decomposition(parts, {"method": "girth-bound", "bound": str(bound)})
    return decomp, bound


def _cycle_components(g: Graph, edge_ids):
    """Connected components of a 2-regular edge set, ordered by smallest
    edge id; each is one cycle."""
    remaining = set(edge_ids)
    nbr = {}
    for eid in edge_ids:
        u, v = g.edges[eid]
        nbr.setdefault(u, []).append((v, eid))
        nbr.setdefault(v, []).append((u, eid))
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        remaining.discard(start)
        stack = list(g.edges[start])
        seen_v = set(g.edges[start])
        while stack:
            x = stack.pop()
            for y, eid in nbr[x]:
                if eid in remaining:
                    remaining.discard(eid)
                    comp.add(eid)
                if y not in seen_v:
                    seen_v.add(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out
