"""Headline decomposition algorithms.

``decompose_maxdeg4`` keeps a sequence of edge-disjoint cycles, each
sharing a vertex with its predecessors, and improves it until the leftover
is small enough to recurse on: when the last cycle has an edge uv away
from the earlier cycles and the leftover subgraph connects u to v, the
cycle either grows (the detour is vertex-disjoint from it) or splits the
resulting circuit into at least two cycles, lengthening the sequence.  The
pair (sequence length, last cycle's vertex count) strictly increases
lexicographically, so the loop terminates.

``decompose_clawfree`` removes a minimum vertex-disjoint linkage of the
odd vertices (the leftover is even) and hands the rest to the
even-to-2-regular pipeline.

``decompose_greedy`` iteratively removes longest cycles (exact on small
vertex counts, DFS heuristic above), then emits leftovers as single edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DegreeTooHigh, NotClawFree
from .graph import Graph, find_claw, subgraph_with_map
from .limits import Limits, default_limits
from .odd_linkage import (
    edge_disjoint_reduce,
    initial_pairing,
    min_linkage_exact,
    vertex_disjoint_reduce,
)
from .regular_decomp import even_to_two_regular
from .verify import Decomposition, Part, PartKind

# set by tests to assert the sequence invariants at every loop iteration
CHECK_SEQUENCE_INVARIANTS = False


@dataclass
class CycleSequence:
    graph: Graph
    cycles: list  # of (frozenset edge ids, frozenset vertices)

    def invariant_ok(self) -> bool:
        seen = set()
        acc = set()
        for i, (eset, vset) in enumerate(self.cycles):
            if eset & seen:
                return False
            if i and not (vset & acc):
                return False
            seen |= eset
            acc |= vset
        return True


class _FreeEdges:
    """Leftover-subgraph view with incremental adjacency."""

    def __init__(self, g: Graph, edge_ids):
        self.g = g
        self.edges = set(edge_ids)
        self.adj = {}
        for eid in edge_ids:
            u, v = g.edges[eid]
            self.adj.setdefault(u, set()).add(v)
            self.adj.setdefault(v, set()).add(u)

    def remove(self, eid):
        u, v = self.g.edges[eid]
        self.edges.discard(eid)
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def add(self, eid):
        u, v = self.g.edges[eid]
        self.edges.add(eid)
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    def degree(self, v) -> int:
        return len(self.adj.get(v, ()))

    def vertices(self):
        return sorted(v for v, s in self.adj.items() if s)

    def bfs_path(self, s, t, skip_edge=None):
        """Shortest path s..t as a vertex list, lowest-index tie-breaking;
        ``skip_edge`` (a vertex pair) is unusable."""
        if s == t:
            return [s]
        prev = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(self.adj.get(x, ())):
                if skip_edge and {x, y} == set(skip_edge):
                    continue
                if y not in prev:
                    prev[y] = x
                    if y == t:
                        path = [t]
                        while path[-1] != s:
                            path.append(prev[path[-1]])
                        path.reverse()
                        return path
                    queue.append(y)
        return None

    def components(self):
        out = []
        seen = set()
        for s in self.vertices():
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj.get(x, ()):
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def find_cycle(self):
        """Lowest-index-first DFS cycle, as a vertex list without the
        closing repeat; None if the leftover is a forest."""
        color = {}
        pvert = {}
        for root in self.vertices():
            if root in color:
                continue
            color[root] = 1
            stack = [(root, -1, iter(sorted(self.adj.get(root, ()))))]
            while stack:
                x, parent, it = stack[-1]
                advanced = False
                for y in it:
                    if y == parent:
                        continue
                    state = color.get(y, 0)
                    if state == 1:
                        cyc = [x]
                        while cyc[-1] != y:
                            cyc.append(pvert[cyc[-1]])
                        cyc.reverse()
                        return cyc
                    if state == 0:
                        color[y] = 1
                        pvert[y] = x
                        stack.append((y, x, iter(sorted(self.adj.get(y, ())))))
                        advanced = True
                        break
                if not advanced:
                    color[x] = 2
                    stack.pop()
        return None

    def cycle_through(self, a):
        """A cycle containing vertex a, lowest-first: edge ab plus a path
        b..a avoiding that edge; None if a is on no leftover cycle."""
        for b in sorted(self.adj.get(a, ())):
            path = self.bfs_path(b, a, skip_edge=(a, b))
            if path is not None:
                return [a] + path[:-1]
        return None


def _cycle_from_vertices(g: Graph, verts):
    eset = frozenset(
        g.edge_id(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))
    )
    return eset, frozenset(verts)


def decompose_maxdeg4(g: Graph, limits: Limits | None = None) -> Decomposition:
    """Cycles-and-edges decomposition of a graph with max degree <= 4,
    using at most n_c - 1 parts per connected component on >= 2 vertices."""
    if g.max_degree() > 4:
        raise DegreeTooHigh(f"max degree {g.max_degree()} exceeds 4")
    parts = []
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        cset = set(comp)
        eids = [eid for eid, (u, _) in enumerate(g.edges) if u in cset]
        parts.extend(_maxdeg4_connected(g, sorted(comp), eids))
    return Decomposition(parts, {"method": "maxdeg4"})


def _maxdeg4_connected(g: Graph, vids, eids) -> list:
    if not eids:
        return []
    if len(eids) == len(vids) - 1:  # tree component
        return [Part(PartKind.SINGLE_EDGE, frozenset([e])) for e in sorted(eids)]
    free = _FreeEdges(g, eids)
    seq = CycleSequence(g, [])
    first = free.find_cycle()
    eset, vset = _cycle_from_vertices(g, first)
    seq.cycles.append((eset, vset))
    for e in eset:
        free.remove(e)
    _extend_maximally(g, free, seq)

    while True:
        if CHECK_SEQUENCE_INVARIANTS:
            assert seq.invariant_ok()
        if _should_recurse(g, free, seq):
            return _finish_with_recursion(g, free, seq)
        uv = _pick_detour_edge(g, free, seq)
        if uv is None:
            return _finish_with_recursion(g, free, seq)
        u, v = uv
        last_eset, last_vset = seq.cycles[-1]
        p1 = _cycle_minus_edge_path(g, last_eset, u, v)
        p2 = free.bfs_path(u, v)
        internal_p2 = set(p2[1:-1])
        if not internal_p2 & last_vset:
            # the circuit is one long cycle: grow the last cycle
            new_vertices = p1 + p2[1:-1][::-1]
            eset2, vset2 = _cycle_from_vertices(g, new_vertices)
            seq.cycles[-1] = (eset2, vset2)
            for i in range(len(p2) - 1):
                free.remove(g.edge_id(p2[i], p2[i + 1]))
            free.add(g.edge_id(u, v))
        else:
            # split the circuit into >= 2 cycles, lengthening the sequence
            walk = p1 + p2[::-1][1:]
            ds = _peel_circuit(g, walk)
            acc = set()
            for es, vs in seq.cycles[:-1]:
                acc |= vs
            ordered = _order_cycles(ds, acc)
            seq.cycles.pop()
            seq.cycles.extend(ordered)
            for i in range(len(p2) - 1):
                free.remove(g.edge_id(p2[i], p2[i + 1]))
            free.add(g.edge_id(u, v))
        _extend_maximally(g, free, seq)


def _extend_maximally(g: Graph, free: _FreeEdges, seq: CycleSequence):
    while True:
        acc = sorted(set().union(*(vs for _, vs in seq.cycles)))
        grown = False
        for a in acc:
            if free.degree(a) < 2:
                continue
            verts = free.cycle_through(a)
            if verts is None:
                continue
            eset, vset = _cycle_from_vertices(g, verts)
            seq.cycles.append((eset, vset))
            for e in eset:
                free.remove(e)
            grown = True
            break
        if not grown:
            return


def _should_recurse(g: Graph, free: _FreeEdges, seq: CycleSequence) -> bool:
    acc = set()
    for i, (es, vs) in enumerate(seq.cycles):
        if i and len(vs & acc) >= 2:
            return True
        acc |= vs
    hull = free.vertices()
    if not hull:
        return True
    return len(free.components()) > 1


def _pick_detour_edge(g: Graph, free: _FreeEdges, seq: CycleSequence):
    """Lex-lowest edge of the last cycle avoiding the earlier cycles, with
    both endpoints alive in the leftover; None forces the recursion exit."""
    earlier = set()
    for es, vs in seq.cycles[:-1]:
        earlier |= vs
    last_eset, _ = seq.cycles[-1]
    best = None
    for eid in sorted(last_eset):
        u, v = g.edges[eid]
        if u in earlier or v in earlier:
            continue
        if free.degree(u) == 0 or free.degree(v) == 0:
            continue
        best = (u, v)
        break
    return best


def _finish_with_recursion(g: Graph, free: _FreeEdges, seq: CycleSequence) -> list:
    parts = [Part(PartKind.CYCLE, es) for es, _ in seq.cycles]
    for comp in free.components():
        cset = set(comp)
        sub_eids = [e for e in free.edges if g.edges[e][0] in cset]
        parts.extend(_maxdeg4_connected(g, comp, sub_eids))
    return parts


def _cycle_minus_edge_path(g: Graph, eset, u, v):
    """Vertex path u..v through the cycle, avoiding edge uv."""
    nbr = {}
    for eid in eset:
        a, b = g.edges[eid]
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    path = [u]
    prev = v  # forbid starting across the uv edge
    cur = u
    while cur != v:
        a, b = nbr[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        path.append(cur)
    return path


def _peel_circuit(g: Graph, walk):
    """Split a closed walk (walk[-1] == walk[0], no repeated edges) into
    cycles at the first repeated vertex; returns (edge set, vertex set)
    pairs."""
    assert walk[0] == walk[-1]
    stack = []
    pos = {}
    out = []
    for vert in walk:
        if vert in pos:
            cyc = stack[pos[vert]:]
            out.append(_cycle_from_vertices(g, cyc))
            for x in stack[pos[vert] + 1:]:
                del pos[x]
            del stack[pos[vert] + 1:]
        else:
            pos[vert] = len(stack)
            stack.append(vert)
    return out


def _order_cycles(ds, acc):
    """Order the peeled cycles so each one touches the accumulated vertex
    set (first incidence first); by connectivity of the circuit this always
    succeeds."""
    remaining = list(ds)
    ordered = []
    acc = set(acc)
    if not acc:
        es, vs = remaining.pop(0)
        ordered.append((es, vs))
        acc |= vs
    while remaining:
        for i, (es, vs) in enumerate(remaining):
            if vs & acc:
                ordered.append(remaining.pop(i))
                acc |= vs
                break
        else:
            raise AssertionError("circuit peel produced disconnected cycles")
    return ordered


def decompose_clawfree(g: Graph, limits: Limits | None = None) -> Decomposition:
    """TwoRegular-and-edges decomposition of a claw-free graph: strip a
    minimum vertex-disjoint odd-vertex linkage, then split the even rest
    into max_degree/2 two-regular parts.  At most n - 1 parts."""
    limits = limits or default_limits()
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFree(claw[0], claw[1])
    odd = g.odd_vertices()
    guaranteed = True
    if not odd:
        linkage_edges = []
    elif len(odd) <= limits.linkage_exact_max_t:
        linkage = min_linkage_exact(g, limits)
        linkage_edges = sorted(e for w in linkage.paths for e in w.edge_ids)
    else:
        linkage = vertex_disjoint_reduce(edge_disjoint_reduce(initial_pairing(g)))
        linkage_edges = sorted(e for w in linkage.paths for e in w.edge_ids)
        guaranteed = False
    parts = [Part(PartKind.SINGLE_EDGE, frozenset([e])) for e in linkage_edges]
    rest = sorted(set(range(g.m)) - set(linkage_edges))
    if rest:
        sub, _vmap, emap = subgraph_with_map(g, rest)
        for part in even_to_two_regular(sub).parts:
            parts.append(
                Part(PartKind.TWO_REGULAR, frozenset(emap[e] for e in part.edges))
            )
    return Decomposition(parts, {"method": "clawfree", "bound_guaranteed": guaranteed})


# -- greedy fallback -------------------------------------------------------------


def _longest_cycle_exact(g: Graph, free: _FreeEdges):
    """Exact longest cycle in the leftover by subset DP over the active
    vertices (use only when their count is small).  dp[mask] is the bitset
    of endpoints reachable by a simple path from the root s through exactly
    the vertices of mask; masks ascend, so submasks settle first."""
    active = [v for v in free.vertices() if free.degree(v) >= 2]
    if not active:
        return None
    index = {v: i for i, v in enumerate(active)}
    k = len(active)
    amask = [0] * k
    for v in active:
        for w in free.adj.get(v, ()):
            if w in index:
                amask[index[v]] |= 1 << index[w]
    best = None  # (length, s, mask, endpoint)
    for s in range(k):
        if best is not None and best[0] == k:
            break
        sbit = 1 << s
        above = ((1 << k) - 1) & ~(sbit - 1)
        dp = [0] * (1 << k)
        dp[sbit] = sbit
        for mask in range(sbit, 1 << k):
            ends = dp[mask]
            if not ends or mask & ~above or not mask & sbit:
                continue
            f = ends
            while f:
                bv = f & -f
                f ^= bv
                vi = bv.bit_length() - 1
                if mask.bit_count() >= 3 and amask[vi] >> s & 1:
                    if best is None or mask.bit_count() > best[0]:
                        best = (mask.bit_count(), s, mask, vi)
                ext = amask[vi] & above & ~mask
                while ext:
                    bw = ext & -ext
                    ext ^= bw
                    dp[mask | bw] |= bw
    if best is None:
        return None
    _length, s, mask, vi = best
    sbit = 1 << s
    dp = [0] * (mask + 1)
    dp[sbit] = sbit
    for cur in range(sbit, mask + 1):
        ends = dp[cur]
        if not ends or cur & ~mask:
            continue
        f = ends
        while f:
            bv = f & -f
            f ^= bv
            vj = bv.bit_length() - 1
            ext = amask[vj] & mask & ~cur
            while ext:
                bw = ext & -ext
                ext ^= bw
                if cur | bw <= mask:
                    dp[cur | bw] |= bw
    path = [vi]
    cur = mask
    while cur != sbit:
        prevmask = cur ^ (1 << path[-1])
        ends = dp[prevmask] & amask[path[-1]]
        assert ends, "longest-cycle reconstruction failed"
        path.append((ends & -ends).bit_length() - 1)
        cur = prevmask
    return [active[i] for i in path]


def _longest_cycle_heuristic(g: Graph, free: _FreeEdges):
    """Best back-edge cycle over lowest-first DFS trees from every root."""
    best = None
    verts = free.vertices()
    for root in verts:
        depth = {root: 0}
        pvert = {root: -1}
        stack = [(root, -1, iter(sorted(free.adj.get(root, ()))))]
        local_best = None
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if y in depth:
                    if depth[y] < depth[x]:
                        cand = depth[x] - depth[y] + 1
                        if cand >= 3 and (local_best is None or cand > local_best[0]):
                            local_best = (cand, x, y)
                    continue
                depth[y] = depth[x] + 1
                pvert[y] = x
                stack.append((y, x, iter(sorted(free.adj.get(y, ())))))
                advanced = True
                break
            if not advanced:
                stack.pop()
        if local_best and (best is None or local_best[0] > best[0]):
            tip, anc = local_best[1], local_best[2]
            path = [tip]
            while path[-1] != anc:
                path.append(pvert[path[-1]])
            best = (local_best[0], path[::-1])
    return best[1] if best else None


def decompose_greedy(g: Graph, limits: Limits | None = None) -> Decomposition:
    """Remove longest cycles until the leftover is a forest, then emit the
    leftover edges singly.  Always valid; no part-count bound beyond m."""
    limits = limits or default_limits()
    free = _FreeEdges(g, range(g.m))
    parts = []
    while True:
        if g.n <= limits.greedy_exact_max_n:
            verts = _longest_cycle_exact(g, free)
        else:
            verts = _longest_cycle_heuristic(g, free)
        if verts is None:
            break
        eset, _vs = _cycle_from_vertices(g, verts)
        parts.append(Part(PartKind.CYCLE, eset))
        for e in eset:
            free.remove(e)
    for e in sorted(free.edges):
        parts.append(Part(PartKind.SINGLE_EDGE, frozenset([e])))
    return Decomposition(parts, {"method": "greedy"})


def decompose_auto(g: Graph, limits: Limits | None = None) -> Decomposition:
    """Dispatch: even graphs to the 2-regular pipeline, max degree <= 4 to
    the cycle builder, claw-free to the linkage route, anything else to
    the greedy fallback."""
    limits = limits or default_limits()
    if g.is_even():
        return even_to_two_regular(g)
    if g.max_degree() <= 4:
        return decompose_maxdeg4(g, limits)
    if find_claw(g) is None:
        return decompose_clawfree(g, limits)
    return decompose_greedy(g, limits)
