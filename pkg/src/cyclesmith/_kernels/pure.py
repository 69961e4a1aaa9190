"""Pure-Python kernels: hot predicates on bitmask-encoded graphs and the
exact-search cores used by the oracles.

Two encodings are used.  Corpus filters work on *pair masks*: bit
``v*(v-1)//2 + u`` (u < v) set iff edge uv present, the same upper-triangle
column order as graph6.  Search cores work on *edge-id masks* over a
graph's 0..m-1 edge ids.

The compiled twin in ``_fast.pyx`` implements the same signatures; both
must return identical values.  Keep this module dependency-free.
"""

from __future__ import annotations

# filter flag bits
CONNECTED = 1
MAXDEG4 = 2
EVEN = 4
CLAWFREE = 8
NONTREE = 16


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def adjacency_masks(n: int, mask: int) -> list:
    adj = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            i += 1
    return adj


def _adj_connected(n: int, adj: list) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def mask_is_connected(n: int, mask: int) -> bool:
    return _adj_connected(n, adjacency_masks(n, mask))


def mask_max_degree(n: int, mask: int) -> int:
    return max((a.bit_count() for a in adjacency_masks(n, mask)), default=0)


def mask_all_even(n: int, mask: int) -> bool:
    return all(a.bit_count() % 2 == 0 for a in adjacency_masks(n, mask))


def _adj_has_claw(n: int, adj: list) -> bool:
    for c in range(n):
        nb = adj[c]
        if nb.bit_count() < 3:
            continue
        f = nb
        while f:
            ba = f & -f
            f ^= ba
            a = ba.bit_length() - 1
            rest = f & ~adj[a]
            g2 = rest
            while g2:
                bb = g2 & -g2
                g2 ^= bb
                b = bb.bit_length() - 1
                if rest & ~adj[b] & ~bb:
                    return True
    return False


def mask_has_claw(n: int, mask: int) -> bool:
    return _adj_has_claw(n, adjacency_masks(n, mask))


def filter_graph_masks(n: int, start: int, stop: int, flags: int) -> list:
    """Pair masks in [start, stop) passing every requested filter."""
    out = []
    for mask in range(start, stop):
        adj = adjacency_masks(n, mask)
        if flags & MAXDEG4 and max((a.bit_count() for a in adj), default=0) > 4:
            continue
        if flags & EVEN and any(a.bit_count() % 2 for a in adj):
            continue
        if flags & NONTREE and mask.bit_count() < n:
            continue
        if flags & CONNECTED and not _adj_connected(n, adj):
            continue
        if flags & CLAWFREE and _adj_has_claw(n, adj):
            continue
        out.append(mask)
    return out


def cycle_space_size(n: int) -> int:
    """Number of even graphs on n labeled vertices: 2^C(n-1, 2)."""
    if n < 1:
        return 1
    k = (n - 1) * (n - 2) // 2
    return 1 << k


def _cycle_space_basis(n: int) -> list:
    """Triangle masks {0i, 0j, ij} for 1 <= i < j < n; they span the even
    graphs on n vertices (fundamental cycles of the star at 0)."""
    basis = []
    for j in range(2, n):
        for i in range(1, j):
            basis.append(
                (1 << pair_index(i, j))
                | (1 << pair_index(0, i))
                | (1 << pair_index(0, j))
            )
    return basis


def connected_even_slice(n: int, start: int, stop: int) -> list:
    """Connected even graphs on n vertices, as pair masks, taken from a
    Gray-code walk of the cycle space; slice [start, stop) of that walk."""
    if start >= stop:
        return []
    basis = _cycle_space_basis(n)
    gray = start ^ (start >> 1)
    state = 0
    for j in range(len(basis)):
        if gray >> j & 1:
            state ^= basis[j]
    out = []
    t = start
    while True:
        if state and mask_is_connected(n, state):
            out.append(state)
        t += 1
        if t >= stop:
            break
        state ^= basis[(t & -t).bit_length() - 1]
    return out


def mask_is_k4trees(n: int, mask: int) -> bool:
    """Brute-force recogniser: some 4-subset induces a K4 whose removal
    leaves a forest in which every component holds exactly one of the four."""
    if n < 4:
        return False
    adj = adjacency_masks(n, mask)
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            if not adj[a] >> b & 1:
                continue
            for c in range(b + 1, n - 1):
                if not (adj[a] >> c & 1 and adj[b] >> c & 1):
                    continue
                for d in range(c + 1, n):
                    if not (adj[a] >> d & 1 and adj[b] >> d & 1 and adj[c] >> d & 1):
                        continue
                    if _k4trees_rest_ok(n, adj, (a, b, c, d)):
                        return True
    return False


def _k4trees_rest_ok(n, adj, quad) -> bool:
    qmask = 0
    for x in quad:
        qmask |= 1 << x
    # adjacency with the six K4 edges removed
    radj = list(adj)
    for x in quad:
        radj[x] = adj[x] & ~qmask
    seen = 0
    full = (1 << n) - 1
    while seen != full:
        s = (~seen & full) & -(~seen & full)
        comp = s
        frontier = s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= radj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & ~comp
            comp |= frontier
        # tree check: edges within comp == |comp| - 1
        deg_sum = 0
        f = comp
        while f:
            b = f & -f
            deg_sum += (radj[b.bit_length() - 1] & comp).bit_count()
            f ^= b
        if deg_sum // 2 != comp.bit_count() - 1:
            return False
        if (comp & qmask).bit_count() != 1:
            return False
        seen |= comp
    return True


# -- search cores over edge-id masks ------------------------------------------


def simple_cycles(n: int, us: list, vs: list, limit: int):
    """All simple cycles, each once, as (edge_mask, size, vertex_mask) lists.

    Canonical form: the cycle's smallest vertex is the DFS root and the
    orientation with the smaller second vertex is kept.  Returns None if
    more than ``limit`` cycles exist.
    """
    m = len(us)
    inc = [[] for _ in range(n)]
    for i in range(m):
        inc[us[i]].append((vs[i], i))
        inc[vs[i]].append((us[i], i))
    for lst in inc:
        lst.sort()
    masks, sizes, vmasks = [], [], []
    for s in range(n):
        # DFS over simple paths s -> ... using only vertices > s
        stack = [(s, 0, 0, 0)]  # (vertex, incidence idx, edge_mask, vertex_mask_above_s)
        path = [s]
        while stack:
            v, idx, emask, vmask = stack[-1]
            if idx >= len(inc[v]):
                stack.pop()
                path.pop()
                continue
            stack[-1] = (v, idx + 1, emask, vmask)
            w, eid = inc[v][idx]
            if w == s:
                if len(path) >= 3 and path[1] < path[-1]:
                    cm = emask | (1 << eid)
                    masks.append(cm)
                    sizes.append(len(path))
                    vmasks.append(vmask | (1 << s))
                    if len(masks) > limit:
                        return None
                continue
            if w < s or vmask >> w & 1:
                continue
            stack.append((w, 0, emask | (1 << eid), vmask | (1 << w)))
            path.append(w)
    return masks, sizes, vmasks


def max_packing(masks: list, sizes: list, m: int, node_cap: int):
    """Max total (size-1) over pairwise edge-disjoint candidate subsets.

    Returns (best_gain, chosen_indices, nodes, completed).  ``completed``
    is False when the node cap interrupted the proof of optimality.
    """
    order = sorted(range(len(masks)), key=lambda i: -sizes[i])
    omasks = [masks[i] for i in order]
    osizes = [sizes[i] for i in order]
    k = len(order)
    best = [0, []]
    nodes = [0]
    capped = [False]

    def dfs(idx, used, gain, chosen):
        if gain > best[0]:
            best[0] = gain
            best[1] = chosen[:]
        if nodes[0] > node_cap:
            capped[0] = True
            return
        free = m - used.bit_count()
        for i in range(idx, k):
            sz = osizes[i]
            # any future packing gains at most free*(sz-1)/sz from here on
            if gain + free * (sz - 1) // sz <= best[0]:
                return
            if omasks[i] & used:
                continue
            nodes[0] += 1
            if nodes[0] > node_cap:
                capped[0] = True
                return
            chosen.append(i)
            dfs(i + 1, used | omasks[i], gain + sz - 1, chosen)
            chosen.pop()

    dfs(0, 0, 0, [])
    chosen = sorted(order[i] for i in best[1])
    return best[0], chosen, nodes[0], not capped[0]


def min_cover(masks: list, sizes: list, m: int, allow_singles: bool, node_cap: int):
    """Minimum number of parts covering all m edges, parts drawn from the
    candidates (cycles) plus, optionally, single edges.

    Returns (best_count, chosen_indices, singles_mask, nodes, completed).
    best_count < 0 means infeasible (singles disallowed and some edge is
    on no candidate).
    """
    full = (1 << m) - 1
    k = len(masks)
    cover_by_edge = [[] for _ in range(m)]
    order = sorted(range(k), key=lambda i: -sizes[i])
    for i in order:
        mk = masks[i]
        f = mk
        while f:
            b = f & -f
            cover_by_edge[b.bit_length() - 1].append(i)
            f ^= b
    if not allow_singles:
        for e in range(m):
            if not cover_by_edge[e]:
                return -1, [], 0, 0, True
    lmax = max(sizes, default=1)

    # greedy upper bound
    unc = full
    g_chosen = []
    while unc:
        bi, bc = -1, 0
        for i in range(k):
            c = (masks[i] & unc).bit_count()
            if c > bc:
                bi, bc = i, c
        if bi < 0 or bc <= 1:
            break
        g_chosen.append(bi)
        unc &= ~masks[bi]
    g_singles = unc
    best = [len(g_chosen) + (unc.bit_count() if allow_singles else (0 if not unc else 10**9)),
            g_chosen[:], g_singles]
    if not allow_singles and unc:
        best[0] = 10 ** 9

    nodes = [0]
    capped = [False]

    def dfs(unc, count, chosen, singles):
        if count + (unc.bit_count() + lmax - 1) // lmax >= best[0]:
            return
        if not unc:
            best[0] = count
            best[1] = chosen[:]
            best[2] = singles
            return
        if nodes[0] > node_cap:
            capped[0] = True
            return
        # branch on the uncovered edge with fewest candidate cycles
        be, bl = -1, None
        f = unc
        while f:
            b = f & -f
            e = b.bit_length() - 1
            lst = cover_by_edge[e]
            if bl is None or len(lst) < bl:
                be, bl = e, len(lst)
            f ^= b
        for i in cover_by_edge[be]:
            nodes[0] += 1
            if nodes[0] > node_cap:
                capped[0] = True
                return
            chosen.append(i)
            dfs(unc & ~masks[i], count + 1, chosen, singles)
            chosen.pop()
        if allow_singles:
            nodes[0] += 1
            dfs(unc & ~(1 << be), count + 1, chosen, singles | (1 << be))

    dfs(full, 0, [], 0)
    if best[0] >= 10 ** 9:
        return -1, [], 0, nodes[0], not capped[0]
    return best[0], sorted(best[1]), best[2], nodes[0], not capped[0]


# -- composite per-graph oracles (single call per sweep item) -------------------


def ce_exact(n: int, us: list, vs: list, cycle_limit: int, node_cap: int):
    """Minimum cycles+edges decomposition size: m - max packing gain.

    Returns (count, chosen_cycle_masks, ncycles, nodes, completed);
    count < 0 when the cycle limit was exceeded.
    """
    m = len(us)
    enum = simple_cycles(n, us, vs, cycle_limit)
    if enum is None:
        return -1, [], -1, 0, False
    masks, sizes, _ = enum
    gain, chosen, nodes, completed = max_packing(masks, sizes, m, node_cap)
    return m - gain, sorted(masks[i] for i in chosen), len(masks), nodes, completed


def gce_exact(n: int, us: list, vs: list, cycle_limit: int, node_cap: int):
    """Minimum cycles+edges cover size.

    Returns (count, chosen_cycle_masks, singles_mask, ncycles, nodes,
    completed); count < 0 when the cycle limit was exceeded.
    """
    enum = simple_cycles(n, us, vs, cycle_limit)
    if enum is None:
        return -1, [], 0, -1, 0, False
    masks, sizes, _ = enum
    count, chosen, singles, nodes, completed = min_cover(
        masks, sizes, len(us), True, node_cap
    )
    return count, sorted(masks[i] for i in chosen), singles, len(masks), nodes, completed


def fan_exact(n: int, us: list, vs: list, cycle_limit: int, node_cap: int):
    """Minimum cycles-only cover size (even input graphs are always
    coverable).  Returns (count, chosen_cycle_masks, ncycles, nodes,
    completed); count < 0 on cycle-limit overflow or infeasibility."""
    enum = simple_cycles(n, us, vs, cycle_limit)
    if enum is None:
        return -1, [], -1, 0, False
    masks, sizes, _ = enum
    count, chosen, _singles, nodes, completed = min_cover(
        masks, sizes, len(us), False, node_cap
    )
    return count, sorted(masks[i] for i in chosen), len(masks), nodes, completed
