"""Simple undirected graphs with stable vertex and edge ids.

Vertices are the dense integers ``0..n-1``.  Edges are unordered pairs
``(u, v)`` with ``u < v``; they are stored sorted lexicographically and the
position in that order is the edge id, so ids are a bijection onto
``0..m-1`` and every algorithm downstream is reproducible byte for byte.

Everything in this module is a pure function of its inputs; ``Graph``
values are immutable after construction and safe to share between
concurrent tasks.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import (
    MalformedEdgeList,
    MalformedGraph6,
    NoSuchCycle,
    NotEven,
    UnsupportedFormat,
)

__all__ = [
    "Graph",
    "Walk",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "write_dot",
    "connected_components",
    "is_connected",
    "cut_vertices_and_blocks",
    "girth",
    "eulerian_circuit",
    "cycle_through_two_edges",
    "find_claw",
]


class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n: vertex count; vertices are 0..n-1.
        edges: tuple of (u, v) pairs with u < v, sorted; index = edge id.
        adj: per-vertex tuple of sorted neighbour tuples.
    """

    __slots__ = ("n", "edges", "adj", "_edge_index")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for i in range(1, len(norm)):
            if norm[i] == norm[i - 1]:
                raise ValueError(f"parallel edge {norm[i]}")
        self._init_sorted(n, norm)

    @classmethod
    def _from_sorted_edges(cls, n: int, sorted_edges: list) -> "Graph":
        """Fast path for trusted, already lex-sorted duplicate-free input."""
        g = object.__new__(cls)
        g._init_sorted(n, sorted_edges)
        return g

    def _init_sorted(self, n: int, sorted_edges: list) -> None:
        self.n = n
        self.edges = tuple(sorted_edges)
        nbrs = [[] for _ in range(n)]
        for u, v in sorted_edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def is_even(self) -> bool:
        return all(len(a) % 2 == 0 for a in self.adj)

    def odd_vertices(self) -> list:
        return [v for v in range(self.n) if len(self.adj[v]) % 2 == 1]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        return self._edge_index[(u, v) if u < v else (v, u)]

    def endpoints(self, eid: int):
        return self.edges[eid]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge sequence v0, e1, v1, ..., et, vt.

    Edge ids are stored explicitly so that code working on internal
    multigraph representations and code on simple graphs can share one
    walk type.
    """

    vertices: tuple
    edge_ids: tuple

    def __post_init__(self):
        if len(self.vertices) != len(self.edge_ids) + 1:
            raise ValueError("walk needs one more vertex than edges")

    @property
    def closed(self) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edge_ids)


def walk_from_vertices(g: Graph, vertices) -> Walk:
    """Build a Walk through consecutive vertices, resolving edge ids in g."""
    vs = tuple(vertices)
    eids = tuple(g.edge_id(vs[i], vs[i + 1]) for i in range(len(vs) - 1))
    return Walk(vs, eids)


def subgraph_with_map(g: Graph, edge_ids):
    """Compact subgraph on the vertices touched by ``edge_ids``.

    Returns ``(sub, vmap, emap)`` where ``vmap[i]`` is the original vertex
    behind sub-vertex i and ``emap[j]`` the original edge id behind
    sub-edge j.  Vertex order is ascending, so the mapping is deterministic.
    """
    ids = sorted(edge_ids)
    verts = sorted({x for eid in ids for x in g.edges[eid]})
    vindex = {v: i for i, v in enumerate(verts)}
    pairs = []
    for eid in ids:
        u, v = g.edges[eid]
        pairs.append(((vindex[u], vindex[v]), eid))
    pairs.sort()
    sub = Graph._from_sorted_edges(len(verts), [p for p, _ in pairs])
    emap = [orig for _, orig in pairs]
    return sub, verts, emap


# -- graph6 ----------------------------------------------------------------

_G6_MIN, _G6_MAX = 63, 126


def parse_graph6(text: str) -> Graph:
    """Decode a single-line graph6 string (single-byte size field, n <= 62).

    The optional ``>>graph6<<`` header and surrounding whitespace are
    accepted and stripped.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise MalformedGraph6("empty input")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not (_G6_MIN <= b <= _G6_MAX):
            raise MalformedGraph6(f"byte {b} outside graph6 range 63..126")
    if data[0] == 126:
        raise UnsupportedFormat("multi-byte graph6 size field (n > 62)")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != nbytes:
        raise MalformedGraph6(
            f"payload length {len(payload)} != {nbytes} expected for n={n}"
        )
    bits = []
    for b in payload:
        x = b - 63
        bits.extend(((x >> k) & 1) for k in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    edges.sort()
    return Graph._from_sorted_edges(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode as graph6 (bit-exact per the public format, n <= 62 only)."""
    if g.n > 62:
        raise UnsupportedFormat("graph6 output limited to n <= 62; use edge lists")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


# -- edge-list text ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n m``, then m lines ``u v``
    with 0 <= u < v < n.  Blank lines are ignored."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedEdgeList("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedEdgeList(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedEdgeList(f"header must be integers: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MalformedEdgeList(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedEdgeList(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise MalformedEdgeList(f"bad edge line {ln!r}") from exc
        if not (0 <= u < v < n):
            raise MalformedEdgeList(f"edge {u} {v} violates 0 <= u < v < n={n}")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_DOT_COLORS = (
    "red", "blue", "green", "orange", "purple", "brown", "cyan",
    "magenta", "gold", "darkgreen", "navy", "crimson",
)


def write_dot(g: Graph, parts=None) -> str:
    """DOT export; when ``parts`` (an iterable of edge-id collections) is
    given, part membership is shown as an edge colour attribute.  Edges in
    several parts of a cover get a colon-separated colour list."""
    colors_by_edge = {}
    if parts is not None:
        for i, part in enumerate(parts):
            c = _DOT_COLORS[i % len(_DOT_COLORS)]
            for eid in sorted(part):
                colors_by_edge.setdefault(eid, []).append(c)
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for eid, (u, v) in enumerate(g.edges):
        if eid in colors_by_edge:
            lines.append(f'  {u} -- {v} [color="{":".join(colors_by_edge[eid])}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- components, blocks, girth ----------------------------------------------


def connected_components(g: Graph) -> list:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest vertex."""
    seen = [False] * g.n
    comps = []
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
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(connected_components(g)) == 1


def cut_vertices_and_blocks(g: Graph):
    """Cut vertices and biconnected blocks (the block-cut tree's pieces).

    Returns ``(cut_vertices, blocks)`` where blocks are lists of edge ids;
    every edge lies in exactly one block.  Blocks are ordered by their
    smallest edge id, cut vertices ascending.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    blocks = []
    edge_stack = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        # iterative DFS: stack of (v, parent_edge_id, neighbour iterator index)
        stack = [(root, -1, 0)]
        root_children = 0
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pe, idx = stack[-1]
            if idx < len(g.adj[v]):
                stack[-1] = (v, pe, idx + 1)
                w = g.adj[v][idx]
                eid = g.edge_id(v, w)
                if eid == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, eid, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block
                    blk = []
                    while True:
                        eid = edge_stack.pop()
                        blk.append(eid)
                        if eid == pe:
                            break
                    blk.sort()
                    blocks.append(blk)
                    if u != root:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
    blocks.sort(key=lambda b: b[0])
    return sorted(cuts), blocks


def girth(g: Graph):
    """Length of a shortest cycle; ``math.inf`` for forests.

    BFS from every vertex; for the root on a shortest cycle the first
    non-tree edge yields the exact girth, so the minimum over roots is
    exact.
    """
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best - 1:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cand = dist[x] + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


# -- Euler circuits ----------------------------------------------------------


def eulerian_circuit(g: Graph, start: int) -> Walk:
    """Closed walk through every edge of ``start``'s component exactly once
    (Hierholzer, lowest-index-first, hence deterministic).

    Components other than the one containing ``start`` are ignored by
    contract; the caller iterates components.  Raises NotEven if the
    component has an odd-degree vertex.
    """
    comp = _component_of(g, start)
    for v in comp:
        if len(g.adj[v]) % 2 == 1:
            raise NotEven(f"vertex {v} has odd degree {len(g.adj[v])}")
    if all(not g.adj[v] for v in comp):
        return Walk((start,), ())
    # incidence lists sorted by (neighbour, edge id); pointer per vertex
    inc = {v: [(w, g.edge_id(v, w)) for w in g.adj[v]] for v in comp}
    ptr = {v: 0 for v in comp}
    used = [False] * g.m
    # Hierholzer with an explicit vertex stack; edges recorded on unwind.
    vstack = [start]
    estack = []
    out_vertices = []
    out_edges = []
    while vstack:
        v = vstack[-1]
        lst = inc[v]
        i = ptr[v]
        while i < len(lst) and used[lst[i][1]]:
            i += 1
        ptr[v] = i
        if i == len(lst):
            out_vertices.append(v)
            vstack.pop()
            if estack:
                out_edges.append(estack.pop())
        else:
            w, eid = lst[i]
            used[eid] = True
            vstack.append(w)
            estack.append(eid)
    out_vertices.reverse()
    out_edges.reverse()
    return Walk(tuple(out_vertices), tuple(out_edges))


def _component_of(g: Graph, start: int) -> list:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


# -- cycle through two prescribed edges ---------------------------------------


def cycle_through_two_edges(g: Graph, e1: int, e2: int) -> frozenset:
    """Edge set of a cycle containing both edges ``e1`` and ``e2``.

    Subdivides e1 and e2 by virtual midpoints and looks for two internally
    vertex-disjoint midpoint-to-midpoint paths (Menger via a 2-unit flow
    with unit vertex capacities).  Raises NoSuchCycle when no such cycle
    exists, which signals that the promised 2-connectivity did not hold.
    """
    if e1 == e2:
        raise ValueError("e1 and e2 must differ")
    a1, b1 = g.edges[e1]
    a2, b2 = g.edges[e2]
    # Node ids in the flow network: vertex v splits into v_in=2v, v_out=2v+1,
    # capacity-1 arc in->out.  Midpoints: source S, sink T.
    n2 = 2 * g.n
    S, T = n2, n2 + 1
    arcs = []  # (tail, head); capacity 1 each; parallel reverse arcs appended
    head = {}

    def add(u, w):
        arcs.append([u, w, 1])
        arcs.append([w, u, 0])
        head.setdefault(u, []).append(len(arcs) - 2)
        head.setdefault(w, []).append(len(arcs) - 1)

    for v in range(g.n):
        add(2 * v, 2 * v + 1)
    for eid, (u, v) in enumerate(g.edges):
        if eid in (e1, e2):
            continue
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    for v in (a1, b1):
        add(S, 2 * v)
    for v in (a2, b2):
        add(2 * v + 1, T)

    def bfs_augment():
        prev = {S: -1}
        queue = deque([S])
        while queue:
            x = queue.popleft()
            if x == T:
                break
            for ai in head.get(x, ()):
                tail, h, cap = arcs[ai]
                if cap > 0 and h not in prev:
                    prev[h] = ai
                    queue.append(h)
        if T not in prev:
            return False
        x = T
        while x != S:
            ai = prev[x]
            arcs[ai][2] -= 1
            arcs[ai ^ 1][2] += 1
            x = arcs[ai][0]
        return True

    flow = 0
    while flow < 2 and bfs_augment():
        flow += 1
    if flow < 2:
        raise NoSuchCycle(f"no cycle through edges {e1} and {e2}")
    # Collect saturated original-edge arcs; together with e1, e2 they form
    # the cycle (two vertex-disjoint midpoint paths plus the subdivided edges).
    cyc = {e1, e2}
    for ai in range(0, len(arcs), 2):
        tail, h, cap = arcs[ai]
        if cap == 0 and tail < n2 and h < n2 and tail % 2 == 1 and h % 2 == 0:
            u, v = tail // 2, h // 2
            if u != v:
                cyc.add(g.edge_id(u, v))
    return frozenset(cyc)


# -- claw detection ----------------------------------------------------------


def find_claw(g: Graph):
    """First induced K_{1,3} in lexicographic (center, leaves) order, or
    None if the graph is claw-free."""
    for c in range(g.n):
        nb = g.adj[c]
        d = len(nb)
        if d < 3:
            continue
        for i in range(d - 2):
            for j in range(i + 1, d - 1):
                if g.has_edge(nb[i], nb[j]):
                    continue
                for k in range(j + 1, d):
                    if not g.has_edge(nb[i], nb[k]) and not g.has_edge(nb[j], nb[k]):
                        return c, (nb[i], nb[j], nb[k])
    return None
