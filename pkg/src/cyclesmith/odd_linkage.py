"""Path systems pairing the odd-degree vertices.

A linkage is a set of simple paths whose endpoint multiset is exactly the
odd-degree vertex set T, each odd vertex the endpoint of exactly one path.
Removing a linkage's edge-disjoint union from the graph leaves an even
graph, which is what the decomposition pipelines need.

Three levels of quality are provided: any linkage (``initial_pairing``),
edge-disjoint (``edge_disjoint_reduce``, rewiring at a shared edge),
vertex-disjoint on claw-free graphs (``vertex_disjoint_reduce``), and the
global optimum (``min_linkage_exact`` via a minimum T-join).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotClawFree, TooManyOddVertices
from .graph import Graph, Walk, walk_from_vertices
from .limits import Limits, default_limits

_INF = float("inf")


@dataclass
class PathLinkage:
    graph: Graph
    paths: list  # of Walk, each open and simple

    @property
    def total_edges(self) -> int:
        return sum(len(w) for w in self.paths)

    def endpoint_multiset(self) -> list:
        out = []
        for w in self.paths:
            out.append(w.vertices[0])
            out.append(w.vertices[-1])
        return sorted(out)


@dataclass
class ReduceStats:
    """Records total_edges after every applied rewrite (tests assert the
    sequence is strictly decreasing)."""

    totals: list = field(default_factory=list)


def linkage_is_valid(l: PathLinkage) -> bool:
    g = l.graph
    for w in l.paths:
        vs = w.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        for i in range(len(vs) - 1):
            if not g.has_edge(vs[i], vs[i + 1]):
                return False
    return l.endpoint_multiset() == g.odd_vertices()


def _bfs_path(g: Graph, s: int, t: int, adj=None):
    """Shortest s-t path as a vertex list, lowest-index tie-breaking."""
    if s == t:
        return [s]
    adj = adj if adj is not None else g.adj
    prev = {s: -1}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
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


def initial_pairing(g: Graph) -> PathLinkage:
    """Any valid linkage: odd vertices paired in sorted order inside each
    component, joined by shortest paths.  Paths may share edges."""
    paths = []
    for comp in _components(g):
        odds = [v for v in comp if g.degree(v) % 2 == 1]
        for i in range(0, len(odds), 2):
            vs = _bfs_path(g, odds[i], odds[i + 1])
            paths.append(walk_from_vertices(g, vs))
    return PathLinkage(g, paths)


def _components(g: Graph):
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        yield sorted(comp)


def _simplify(vertices: list) -> list:
    """Cut the loops out of a walk, keeping endpoints."""
    pos = {}
    out = []
    for v in vertices:
        if v in pos:
            k = pos[v]
            for x in out[k + 1:]:
                del pos[x]
            del out[k + 1:]
        else:
            pos[v] = len(out)
            out.append(v)
    return out


def _first_shared_edge(paths):
    """(i, j, a, b) for the first edge shared by two paths: i < j, the edge
    sits at position a of path i and b of path j."""
    owner = {}
    for j, p in enumerate(paths):
        for b in range(len(p) - 1):
            e = (p[b], p[b + 1]) if p[b] < p[b + 1] else (p[b + 1], p[b])
            if e in owner:
                i, a = owner[e]
                if i != j:
                    return i, j, a, b
            else:
                owner[e] = (j, b)
    return None


def edge_disjoint_reduce(l: PathLinkage, stats: ReduceStats | None = None) -> PathLinkage:
    """Rewire shared edges away.  Each applied swap drops the shared edge
    from both paths (total strictly decreases by at least 2), preserving
    the endpoint multiset; walks are re-simplified to paths afterwards."""
    paths = [list(w.vertices) for w in l.paths]
    while True:
        hit = _first_shared_edge(paths)
        if hit is None:
            break
        i, j, a, b = hit
        p1, p2 = paths[i], paths[j]
        if (p1[a], p1[a + 1]) != (p2[b], p2[b + 1]):
            p2 = p2[::-1]
            b = len(p2) - 2 - b
        # p1: x1..xa=u, v..xt ; p2: y1..yb=u, v..yl  (same orientation)
        new1 = _simplify(p1[:a + 1] + p2[:b][::-1])
        new2 = _simplify(p1[a + 1:][::-1] + p2[b + 2:])
        paths[i], paths[j] = new1, new2
        if stats is not None:
            stats.totals.append(sum(len(p) - 1 for p in paths))
    return PathLinkage(l.graph, [walk_from_vertices(l.graph, p) for p in paths])


def _first_shared_vertex(paths):
    owner = {}
    for j, p in enumerate(paths):
        for b, v in enumerate(p):
            if v in owner:
                i, a = owner[v]
                if i != j:
                    return i, j, a, b
            else:
                owner[v] = (j, b)
    return None


def vertex_disjoint_reduce(
    l: PathLinkage, stats: ReduceStats | None = None
) -> PathLinkage:
    """On a claw-free graph, shrink an edge-disjoint linkage until its paths
    are pairwise vertex-disjoint.

    At a shared vertex w with neighbours a, b along one path and c along
    the other, claw-freeness forces an edge inside {a, b, c}; each rewrite
    (shortcut awb -> ab, or the exchange through ac/bc) strictly decreases
    total_edges.  If {a, b, c} is independent the claw (w; a, b, c) is
    raised as a NotClawFree witness.
    """
    g = l.graph
    current = edge_disjoint_reduce(l)
    paths = [list(w.vertices) for w in current.paths]
    while True:
        hit = _first_shared_vertex(paths)
        if hit is None:
            break
        i, j, a, b = hit
        # role 1: path where the shared vertex is internal
        if 0 < a < len(paths[i]) - 1:
            i1, pos1, i2, pos2 = i, a, j, b
        elif 0 < b < len(paths[j]) - 1:
            i1, pos1, i2, pos2 = j, b, i, a
        else:
            raise AssertionError("vertex shared by two path endpoints")
        p1, p2 = paths[i1], paths[i2]
        w = p1[pos1]
        va, vb = p1[pos1 - 1], p1[pos1 + 1]
        if pos2 == 0:
            p2 = p2[::-1]
            pos2 = len(p2) - 1
        vc = p2[pos2 - 1]
        if g.has_edge(va, vb):
            new1 = _simplify(p1[:pos1] + p1[pos1 + 1:])
            new2 = p2
        elif g.has_edge(va, vc):
            new1 = _simplify(p1[:pos1] + p2[:pos2][::-1])
            new2 = _simplify(p1[pos1:][::-1] + p2[pos2 + 1:])
        elif g.has_edge(vb, vc):
            p1r = p1[::-1]
            pos1r = len(p1) - 1 - pos1
            new1 = _simplify(p1r[:pos1r] + p2[:pos2][::-1])
            new2 = _simplify(p1r[pos1r:][::-1] + p2[pos2 + 1:])
        else:
            raise NotClawFree(w, (va, vb, vc))
        paths[i1], paths[i2] = new1, new2
        if stats is not None:
            stats.totals.append(sum(len(p) - 1 for p in paths))
        # a rewrite may reintroduce a shared edge; restore edge-disjointness
        tmp = edge_disjoint_reduce(
            PathLinkage(g, [walk_from_vertices(g, p) for p in paths]), stats
        )
        paths = [list(wk.vertices) for wk in tmp.paths]
    return PathLinkage(g, [walk_from_vertices(g, p) for p in paths])


# -- exact minimum via T-join ---------------------------------------------------


def _terminal_distances(g: Graph, terminals):
    dist = {}
    for s in terminals:
        d = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in d:
                    d[y] = d[x] + 1
                    queue.append(y)
        dist[s] = d
    return dist


def _pairing_dp(terminals, weight):
    """Min-weight perfect matching on the terminals by subset DP.

    Returns (dp table, full mask).  ``weight[i][j]`` may be inf for
    terminals in different components; a finite pairing always exists
    because every component holds an even number of terminals."""
    t = len(terminals)
    full = (1 << t) - 1
    dp = [_INF] * (full + 1)
    dp[0] = 0
    for mask in range(1, full + 1):
        if mask.bit_count() % 2:
            continue
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        f = rest
        best = _INF
        while f:
            bj = f & -f
            j = bj.bit_length() - 1
            f ^= bj
            w = weight[i][j]
            if w < _INF:
                cand = dp[mask ^ (1 << i) ^ bj] + w
                if cand < best:
                    best = cand
        dp[mask] = best
    return dp, full


def _lex_optimal_pairing(dp, full, weight):
    pairs = []
    mask = full
    while mask:
        i = (mask & -mask).bit_length() - 1
        f = mask ^ (1 << i)
        g2 = f
        while g2:
            bj = g2 & -g2
            j = bj.bit_length() - 1
            g2 ^= bj
            if weight[i][j] < _INF and dp[mask] == dp[mask ^ (1 << i) ^ bj] + weight[i][j]:
                pairs.append((i, j))
                mask ^= (1 << i) | bj
                break
        else:
            raise AssertionError("pairing DP reconstruction failed")
    return pairs


def _optimal_pairings(dp, full, weight, cap):
    """All optimal pairings in lexicographic order, at most ``cap``."""
    out = []

    def rec(mask, acc):
        if len(out) >= cap:
            return
        if not mask:
            out.append(list(acc))
            return
        i = (mask & -mask).bit_length() - 1
        f = mask ^ (1 << i)
        g2 = f
        while g2:
            bj = g2 & -g2
            j = bj.bit_length() - 1
            g2 ^= bj
            if weight[i][j] < _INF and dp[mask] == dp[mask ^ (1 << i) ^ bj] + weight[i][j]:
                acc.append((i, j))
                rec(mask ^ (1 << i) ^ bj, acc)
                acc.pop()
                if len(out) >= cap:
                    return

    rec(full, [])
    return out


def min_t_join(g: Graph):
    """A minimum T-join for T = odd-degree vertices, as a frozenset of edge
    ids.  Symmetric difference of shortest paths over a minimum-weight
    pairing of T; minimal T-joins are forests."""
    terminals = g.odd_vertices()
    if not terminals:
        return frozenset()
    dist = _terminal_distances(g, terminals)
    t = len(terminals)
    weight = [[dist[terminals[i]].get(terminals[j], _INF) for j in range(t)]
              for i in range(t)]
    dp, full = _pairing_dp(terminals, weight)
    pairs = _lex_optimal_pairing(dp, full, weight)
    return _realize_join(g, terminals, pairs)


def _realize_join(g: Graph, terminals, pairs, override=None):
    """XOR of one shortest path per pair; ``override`` maps a pair position
    to an explicit vertex path to use instead."""
    join = set()
    for pos, (i, j) in enumerate(pairs):
        if override and pos in override:
            vs = override[pos]
        else:
            vs = _bfs_path(g, terminals[i], terminals[j])
        for k in range(len(vs) - 1):
            join ^= {g.edge_id(vs[k], vs[k + 1])}
    return frozenset(join)


def _join_to_paths(g: Graph, join) -> list:
    """Partition a T-join (a forest here) into simple paths pairing its
    odd-degree vertices: repeatedly remove the shortest path between the
    lowest current odd vertex and its nearest odd mate."""
    adj = {}
    deg = {}
    for eid in join:
        u, v = g.edges[eid]
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    odd = {v for v, d in deg.items() if d % 2}
    paths = []
    while odd:
        s = min(odd)
        prev = {s: -1}
        queue = deque([s])
        t = None
        while queue:
            x = queue.popleft()
            if x != s and x in odd:
                t = x
                break
            for y in sorted(adj.get(x, ())):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        assert t is not None, "odd vertex without a mate in its component"
        vs = [t]
        while vs[-1] != s:
            vs.append(prev[vs[-1]])
        vs.reverse()
        for k in range(len(vs) - 1):
            a, b = vs[k], vs[k + 1]
            adj[a].discard(b)
            adj[b].discard(a)
            for x in (a, b):
                deg[x] -= 1
        odd.discard(s)
        odd.discard(t)
        paths.append(vs)
    return paths


def min_linkage_exact(g: Graph, limits: Limits | None = None) -> PathLinkage:
    """Globally minimum-total-edges linkage.

    All-pairs shortest paths restricted to T, minimum-weight perfect
    matching by subset DP (lexicographically smallest among optima), paths
    realised and repartitioned through the resulting minimum T-join.  Among
    equal-cost pairings, one whose realisation passes through a
    maximum-degree vertex is preferred when it exists.
    """
    limits = limits or default_limits()
    terminals = g.odd_vertices()
    if not terminals:
        return PathLinkage(g, [])
    if len(terminals) > limits.linkage_exact_max_t:
        raise TooManyOddVertices(
            f"{len(terminals)} odd vertices exceeds exact threshold "
            f"{limits.linkage_exact_max_t}"
        )
    dist = _terminal_distances(g, terminals)
    t = len(terminals)
    weight = [[dist[terminals[i]].get(terminals[j], _INF) for j in range(t)]
              for i in range(t)]
    dp, full = _pairing_dp(terminals, weight)

    delta = g.max_degree()
    best_paths = None
    for pairing in _optimal_pairings(dp, full, weight, cap=200):
        join = _realize_join(g, terminals, pairing)
        vertex_paths = _join_to_paths(g, join)
        if best_paths is None:
            best_paths = vertex_paths
        if any(g.degree(v) == delta for p in vertex_paths for v in p):
            best_paths = vertex_paths
            break
        rerouted = _reroute_through_max_degree(g, terminals, pairing, dist, delta)
        if rerouted is not None:
            best_paths = rerouted
            break
    linkage = PathLinkage(g, [walk_from_vertices(g, p) for p in best_paths])
    # the repartitioned optimum is already edge-disjoint; this is a fixpoint
    return edge_disjoint_reduce(linkage)


def _reroute_through_max_degree(g: Graph, terminals, pairing, dist, delta):
    """Equal-cost realisation through a max-degree vertex, if one exists.

    Every path of an optimal system has length exactly its pair's
    distance, so a minimum linkage passes through u iff some pair (s, t)
    satisfies dist(s,u) + dist(u,t) = dist(s,t); splicing the two shortest
    halves keeps the total minimal and the spliced walk simple."""
    for pos, (i, j) in enumerate(pairing):
        s, t = terminals[i], terminals[j]
        ds, dt = dist[s], dist[t]
        dst = ds.get(t)
        for u in range(g.n):
            if g.degree(u) != delta or u in (s, t):
                continue
            if ds.get(u, _INF) + dt.get(u, _INF) == dst:
                via = _bfs_path(g, s, u) + _bfs_path(g, u, t)[1:]
                join = _realize_join(g, terminals, pairing, {pos: via})
                return _join_to_paths(g, join)
    return None
