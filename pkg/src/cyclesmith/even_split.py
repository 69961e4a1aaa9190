"""Split a graph into an even subgraph plus a small forest, and classify
the graphs whose forest cannot get below n-2 edges.

``even_forest_split`` is a local-augmentation loop: absorb cycles into the
even part H while any exist outside it; once the leftover is a spanning
tree, reroute one H-edge through the tree (strictly growing H) and retry.
It stops with a leftover forest of at most n-2 edges on any input with a
cycle.

``classify_n3`` decides the exact dichotomy using an edge-maximum even
subgraph (complement of a minimum T-join): either the forest has at most
n-3 edges (TypeI), or the graph is a K4 with a disjoint tree hanging off
every K4 vertex (TypeII, with the witness 4-set).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph, connected_components, is_connected
from .odd_linkage import min_t_join
from .verify import Decomposition, Part, PartKind


class SplitClass(enum.Enum):
    HAS_NO_CYCLE = "HasNoCycle"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


@dataclass
class SplitCertificate:
    even_edges: frozenset
    forest_edges: frozenset
    classification: SplitClass | None
    witness: tuple | None = None  # TypeII K4 vertex set


def _find_cycle_edges(g: Graph, allowed, vertices):
    """Edge ids of some cycle inside ``allowed``, lowest-index-first DFS;
    None if the restriction is a forest."""
    adj = {v: [] for v in vertices}
    for eid in allowed:
        u, v = g.edges[eid]
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    for lst in adj.values():
        lst.sort()
    color = {}  # 1 on stack, 2 done
    pvert = {}
    pedge = {}
    for root in vertices:
        if root in color:
            continue
        color[root] = 1
        stack = [(root, -1, 0)]
        while stack:
            x, pe, idx = stack[-1]
            if idx < len(adj[x]):
                stack[-1] = (x, pe, idx + 1)
                y, eid = adj[x][idx]
                if eid == pe:
                    continue
                state = color.get(y, 0)
                if state == 0:
                    color[y] = 1
                    pvert[y] = x
                    pedge[y] = eid
                    stack.append((y, eid, 0))
                elif state == 1:
                    # back edge to an ancestor: close the cycle
                    cyc = [eid]
                    cur = x
                    while cur != y:
                        cyc.append(pedge[cur])
                        cur = pvert[cur]
                    return cyc
            else:
                color[x] = 2
                stack.pop()
    return None


def even_forest_split(g: Graph) -> SplitCertificate:
    """Partition E into an even subgraph H and a forest F; |F| <= n-2
    whenever the graph has a cycle.  Disconnected inputs are handled per
    component and unioned."""
    h_all = set()
    for comp in connected_components(g):
        cset = set(comp)
        comp_edges = {eid for eid, (u, _) in enumerate(g.edges) if u in cset}
        h_all |= _split_component(g, comp, comp_edges)
    forest = frozenset(range(g.m)) - h_all
    cls = SplitClass.HAS_NO_CYCLE if not h_all else None
    return SplitCertificate(frozenset(h_all), forest, cls)


def _split_component(g: Graph, comp, comp_edges) -> set:
    h = set()
    nc = len(comp)
    while True:
        q = comp_edges - h
        cyc = _find_cycle_edges(g, q, comp)
        if cyc is not None:
            h |= set(cyc)
            continue
        if h and len(q) == nc - 1:
            # leftover is a spanning tree: reroute one H-edge through it
            uv = min(h)
            u, v = g.edges[uv]
            path = _tree_path(g, q, u, v)
            h |= set(path)
            h.discard(uv)
            continue
        return h


def _tree_path(g: Graph, tree_edges, u, v):
    adj = {}
    for eid in tree_edges:
        a, b = g.edges[eid]
        adj.setdefault(a, []).append((b, eid))
        adj.setdefault(b, []).append((a, eid))
    prev = {u: (-1, -1)}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y, eid in sorted(adj.get(x, ())):
            if y not in prev:
                prev[y] = (x, eid)
                queue.append(y)
    path = []
    cur = v
    while cur != u:
        px, eid = prev[cur]
        path.append(eid)
        cur = px
    return path


def classify_n3(g: Graph, require_connected: bool = True) -> SplitCertificate:
    """Exact trichotomy for connected graphs with a cycle: TypeI with an
    edge-maximum even subgraph and at most n-3 leftover edges, or TypeII
    with an explicit K4-plus-trees witness."""
    if not is_connected(g):
        raise PreconditionError("classify_n3 needs a connected graph")
    if g.m < g.n:
        raise PreconditionError("classify_n3 needs a graph with a cycle")
    join = min_t_join(g)
    h = frozenset(range(g.m)) - join
    if len(join) <= g.n - 3:
        return SplitCertificate(h, join, SplitClass.TYPE_I)
    witness = _find_k4trees_witness(g)
    if witness is None:
        raise AssertionError(
            "leftover forest above n-3 but no K4-plus-trees witness exists"
        )
    return SplitCertificate(h, join, SplitClass.TYPE_II, witness)


def _find_k4trees_witness(g: Graph):
    n = g.n
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            if not g.has_edge(a, b):
                continue
            for c in range(b + 1, n - 1):
                if not (g.has_edge(a, c) and g.has_edge(b, c)):
                    continue
                for d in range(c + 1, n):
                    if not (g.has_edge(a, d) and g.has_edge(b, d) and g.has_edge(c, d)):
                        continue
                    if _quad_leaves_trees(g, (a, b, c, d)):
                        return (a, b, c, d)
    return None


def _quad_leaves_trees(g: Graph, quad) -> bool:
    qset = set(quad)
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        if u in qset and v in qset:
            continue
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        edge_ends = 0
        while queue:
            x = queue.popleft()
            edge_ends += len(adj[x])
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        if edge_ends // 2 != len(comp) - 1:
            return False
        if sum(1 for x in comp if x in qset) != 1:
            return False
    return True


def split_to_certificate(g: Graph, cert: SplitCertificate) -> Decomposition:
    """Shared certificate with kinds {Even, SingleEdge} plus the
    classification (and witness, when TypeII) in the metadata."""
    parts = []
    if cert.even_edges:
        parts.append(Part(PartKind.EVEN, cert.even_edges))
    for eid in sorted(cert.forest_edges):
        parts.append(Part(PartKind.SINGLE_EDGE, frozenset([eid])))
    meta = {}
    if cert.classification is not None:
        meta["classification"] = cert.classification.value
    if cert.witness is not None:
        meta["witness"] = list(cert.witness)
    return Decomposition(parts, meta)
