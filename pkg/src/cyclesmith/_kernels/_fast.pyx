# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  ``pure.py`` is the reference: every function here
must return identical values; the equivalence tests enforce that.

Word-size limits (enforced by the dispatcher, not here): pair masks need
n <= 11, edge-id masks need m <= 64 and n <= 64.
"""

from libc.stdlib cimport free, malloc, qsort, realloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

CONNECTED = 1
MAXDEG4 = 2
EVEN = 4
CLAWFREE = 8
NONTREE = 16

DEF MAXN = 12          # pair-mask vertices
DEF MAXP = 66          # pair positions for n <= 11


cdef inline int _popll(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int _ctzll(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef void _pair_tables(int n, int *pu, int *pv) noexcept nogil:
    cdef int i = 0, v, u
    for v in range(1, n):
        for u in range(v):
            pu[i] = u
            pv[i] = v
            i += 1


cdef void _build_adj(int n, u64 mask, u64 *adj, int *pu, int *pv) noexcept nogil:
    cdef int i
    cdef u64 f = mask, b
    for i in range(n):
        adj[i] = 0
    while f:
        b = f & (~f + 1)
        i = _ctzll(b)
        adj[pu[i]] |= (<u64>1) << pv[i]
        adj[pv[i]] |= (<u64>1) << pu[i]
        f ^= b


cdef bint _adj_connected(int n, u64 *adj) noexcept nogil:
    cdef u64 seen, frontier, nxt, f, b, full
    if n <= 1:
        return True
    full = ((<u64>1) << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & (~f + 1)
            nxt |= adj[_ctzll(b)]
            f ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


cdef bint _adj_has_claw(int n, u64 *adj) noexcept nogil:
    cdef int c, a, b2
    cdef u64 nb, f, ba, rest, g2, bb
    for c in range(n):
        nb = adj[c]
        if _popll(nb) < 3:
            continue
        f = nb
        while f:
            ba = f & (~f + 1)
            f ^= ba
            a = _ctzll(ba)
            rest = f & ~adj[a]
            g2 = rest
            while g2:
                bb = g2 & (~g2 + 1)
                g2 ^= bb
                b2 = _ctzll(bb)
                if rest & ~adj[b2] & ~bb:
                    return True
    return False


cdef int _adj_max_degree(int n, u64 *adj) noexcept nogil:
    cdef int v, d, best = 0
    for v in range(n):
        d = _popll(adj[v])
        if d > best:
            best = d
    return best


cdef bint _adj_all_even(int n, u64 *adj) noexcept nogil:
    cdef int v
    for v in range(n):
        if _popll(adj[v]) & 1:
            return False
    return True


def mask_is_connected(int n, mask):
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    _pair_tables(n, pu, pv)
    _build_adj(n, <u64> mask, adj, pu, pv)
    return bool(_adj_connected(n, adj))


def mask_max_degree(int n, mask):
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    _pair_tables(n, pu, pv)
    _build_adj(n, <u64> mask, adj, pu, pv)
    return _adj_max_degree(n, adj)


def mask_all_even(int n, mask):
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    _pair_tables(n, pu, pv)
    _build_adj(n, <u64> mask, adj, pu, pv)
    return bool(_adj_all_even(n, adj))


def mask_has_claw(int n, mask):
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    _pair_tables(n, pu, pv)
    _build_adj(n, <u64> mask, adj, pu, pv)
    return bool(_adj_has_claw(n, adj))


def filter_graph_masks(int n, start, stop, int flags):
    cdef u64 cstart = start, cstop = stop, mask
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    _pair_tables(n, pu, pv)
    out = []
    mask = cstart
    while mask < cstop:
        _build_adj(n, mask, adj, pu, pv)
        if flags & MAXDEG4 and _adj_max_degree(n, adj) > 4:
            mask += 1
            continue
        if flags & EVEN and not _adj_all_even(n, adj):
            mask += 1
            continue
        if flags & NONTREE and _popll(mask) < n:
            mask += 1
            continue
        if flags & CONNECTED and not _adj_connected(n, adj):
            mask += 1
            continue
        if flags & CLAWFREE and _adj_has_claw(n, adj):
            mask += 1
            continue
        out.append(mask)
        mask += 1
    return out


def cycle_space_size(int n):
    if n < 1:
        return 1
    cdef int k = (n - 1) * (n - 2) // 2
    return 1 << k


def connected_even_slice(int n, start, stop):
    cdef u64 cstart = start, cstop = stop, t, state, gray
    cdef u64 basis[MAXP]
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    cdef int nb = 0, i, j
    if cstart >= cstop:
        return []
    _pair_tables(n, pu, pv)
    for j in range(2, n):
        for i in range(1, j):
            basis[nb] = ((<u64>1) << (j * (j - 1) // 2 + i)) \
                | ((<u64>1) << (i * (i - 1) // 2)) \
                | ((<u64>1) << (j * (j - 1) // 2))
            nb += 1
    gray = cstart ^ (cstart >> 1)
    state = 0
    for j in range(nb):
        if gray >> j & 1:
            state ^= basis[j]
    out = []
    t = cstart
    while True:
        if state:
            _build_adj(n, state, adj, pu, pv)
            if _adj_connected(n, adj):
                out.append(state)
        t += 1
        if t >= cstop:
            break
        state ^= basis[_ctzll(t)]
    return out


def mask_is_k4trees(int n, mask):
    cdef u64 adj[MAXN]
    cdef int pu[MAXP]
    cdef int pv[MAXP]
    cdef int a, b, c, d
    if n < 4:
        return False
    _pair_tables(n, pu, pv)
    _build_adj(n, <u64> mask, adj, pu, pv)
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
                    if _k4trees_rest_ok(n, adj, a, b, c, d):
                        return True
    return False


cdef bint _k4trees_rest_ok(int n, u64 *adj, int a, int b, int c, int d) noexcept nogil:
    cdef u64 radj[MAXN]
    cdef u64 qmask, seen, full, s, comp, frontier, nxt, f, bb, rem
    cdef int v, deg_sum
    qmask = ((<u64>1) << a) | ((<u64>1) << b) | ((<u64>1) << c) | ((<u64>1) << d)
    for v in range(n):
        radj[v] = adj[v]
        if qmask >> v & 1:
            radj[v] = adj[v] & ~qmask
    seen = 0
    full = ((<u64>1) << n) - 1
    while seen != full:
        rem = ~seen & full
        s = rem & (~rem + 1)
        comp = s
        frontier = s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bb = f & (~f + 1)
                nxt |= radj[_ctzll(bb)]
                f ^= bb
            frontier = nxt & ~comp
            comp |= frontier
        deg_sum = 0
        f = comp
        while f:
            bb = f & (~f + 1)
            deg_sum += _popll(radj[_ctzll(bb)] & comp)
            f ^= bb
        if deg_sum // 2 != _popll(comp) - 1:
            return False
        if _popll(comp & qmask) != 1:
            return False
        seen |= comp
    return True


# -- search cores over edge-id masks ------------------------------------------

cdef struct CycleBuf:
    u64 *masks
    int *sizes
    u64 *vmasks
    int count
    int cap
    int limit           # strictly more than this many cycles -> overflow


cdef bint _buf_init(CycleBuf *buf, int limit) noexcept nogil:
    buf.count = 0
    buf.limit = limit
    buf.cap = 1024 if limit > 1024 else limit + 1
    buf.masks = <u64 *> malloc(sizeof(u64) * buf.cap)
    buf.sizes = <int *> malloc(sizeof(int) * buf.cap)
    buf.vmasks = <u64 *> malloc(sizeof(u64) * buf.cap)
    return buf.masks != NULL and buf.sizes != NULL and buf.vmasks != NULL


cdef void _buf_free(CycleBuf *buf) noexcept nogil:
    if buf.masks != NULL:
        free(buf.masks)
    if buf.sizes != NULL:
        free(buf.sizes)
    if buf.vmasks != NULL:
        free(buf.vmasks)


cdef int _buf_push(CycleBuf *buf, u64 mask, int size, u64 vmask) noexcept nogil:
    """0 ok, -1 overflow (count would exceed limit), -2 allocation failure."""
    cdef int newcap
    if buf.count >= buf.limit:
        return -1
    if buf.count == buf.cap:
        newcap = buf.cap * 2
        if newcap > buf.limit:
            newcap = buf.limit
        buf.masks = <u64 *> realloc(buf.masks, sizeof(u64) * newcap)
        buf.sizes = <int *> realloc(buf.sizes, sizeof(int) * newcap)
        buf.vmasks = <u64 *> realloc(buf.vmasks, sizeof(u64) * newcap)
        if buf.masks == NULL or buf.sizes == NULL or buf.vmasks == NULL:
            return -2
        buf.cap = newcap
    buf.masks[buf.count] = mask
    buf.sizes[buf.count] = size
    buf.vmasks[buf.count] = vmask
    buf.count += 1
    return 0


cdef int _enumerate_cycles(int n, int m, int *eu, int *ev, CycleBuf *buf) noexcept nogil:
    """Fills buf; 0 ok, -1 if more than buf.limit cycles exist, -2 alloc."""
    cdef int inc_n[64][64]
    cdef int inc_e[64][64]
    cdef int inc_len[64]
    cdef int i, j, s, v, idx, w, eid, tn, te, depth, rc
    cdef int sv[66]
    cdef int sidx[66]
    cdef u64 semask[66]
    cdef u64 svmask[66]
    cdef int path[66]
    for i in range(n):
        inc_len[i] = 0
    for i in range(m):
        v = eu[i]
        inc_n[v][inc_len[v]] = ev[i]
        inc_e[v][inc_len[v]] = i
        inc_len[v] += 1
        v = ev[i]
        inc_n[v][inc_len[v]] = eu[i]
        inc_e[v][inc_len[v]] = i
        inc_len[v] += 1
    # insertion sort each incidence list by (neighbour, edge id)
    for v in range(n):
        for i in range(1, inc_len[v]):
            tn = inc_n[v][i]
            te = inc_e[v][i]
            j = i - 1
            while j >= 0 and (inc_n[v][j] > tn or (inc_n[v][j] == tn and inc_e[v][j] > te)):
                inc_n[v][j + 1] = inc_n[v][j]
                inc_e[v][j + 1] = inc_e[v][j]
                j -= 1
            inc_n[v][j + 1] = tn
            inc_e[v][j + 1] = te
    for s in range(n):
        depth = 0
        sv[0] = s
        sidx[0] = 0
        semask[0] = 0
        svmask[0] = 0
        path[0] = s
        while depth >= 0:
            v = sv[depth]
            idx = sidx[depth]
            if idx >= inc_len[v]:
                depth -= 1
                continue
            sidx[depth] = idx + 1
            w = inc_n[v][idx]
            eid = inc_e[v][idx]
            if w == s:
                if depth >= 2 and path[1] < path[depth]:
                    rc = _buf_push(buf, semask[depth] | ((<u64>1) << eid),
                                   depth + 1, svmask[depth] | ((<u64>1) << s))
                    if rc < 0:
                        return rc
                continue
            if w < s or svmask[depth] >> w & 1:
                continue
            depth += 1
            sv[depth] = w
            sidx[depth] = 0
            semask[depth] = semask[depth - 1] | ((<u64>1) << eid)
            svmask[depth] = svmask[depth - 1] | ((<u64>1) << w)
            path[depth] = w
    return 0


cdef int _fill_edges(us, vs, int *eu, int *ev) except -1:
    cdef int m = len(us)
    cdef int i
    for i in range(m):
        eu[i] = us[i]
        ev[i] = vs[i]
    return m


def simple_cycles(int n, us, vs, limit):
    cdef int eu[64]
    cdef int ev[64]
    cdef int m = _fill_edges(us, vs, eu, ev)
    cdef CycleBuf buf
    cdef int i
    if not _buf_init(&buf, <int> limit):
        raise MemoryError()
    try:
        if _enumerate_cycles(n, m, eu, ev, &buf) < 0:
            return None
        masks = [buf.masks[i] for i in range(buf.count)]
        sizes = [buf.sizes[i] for i in range(buf.count)]
        vmasks = [buf.vmasks[i] for i in range(buf.count)]
        return masks, sizes, vmasks
    finally:
        _buf_free(&buf)


# argsort keys: size descending, original index ascending
cdef int _cmp_u64(const void *pa, const void *pb) noexcept nogil:
    cdef u64 a = (<const u64 *> pa)[0]
    cdef u64 b = (<const u64 *> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


cdef struct PackState:
    u64 *masks          # size-desc order
    int *sizes
    int k
    int m
    u64 node_cap
    u64 nodes
    bint capped
    int best_gain
    int *best_set       # positions in sorted order
    int best_len
    int *chosen


cdef void _pack_dfs(PackState *st, int idx, u64 used, int gain, int depth) noexcept nogil:
    cdef int i, sz, free_edges
    if gain > st.best_gain:
        st.best_gain = gain
        st.best_len = depth
        for i in range(depth):
            st.best_set[i] = st.chosen[i]
    if st.nodes > st.node_cap:
        st.capped = True
        return
    free_edges = st.m - _popll(used)
    for i in range(idx, st.k):
        sz = st.sizes[i]
        if gain + free_edges * (sz - 1) // sz <= st.best_gain:
            return
        if st.masks[i] & used:
            continue
        st.nodes += 1
        if st.nodes > st.node_cap:
            st.capped = True
            return
        st.chosen[depth] = i
        _pack_dfs(st, i + 1, used | st.masks[i], gain + sz - 1, depth + 1)


cdef int _pack_run(u64 *masks, int *sizes, int k, int m, u64 node_cap,
                   PackState *st, int *orig) except -1:
    """Sorts candidates, runs the search; orig[] receives the sorted->
    original index map.  Caller provides allocated best_set/chosen."""
    cdef u64 *keys = <u64 *> malloc(sizeof(u64) * (k + 1))
    cdef u64 *smasks = <u64 *> malloc(sizeof(u64) * (k + 1))
    cdef int *ssizes = <int *> malloc(sizeof(int) * (k + 1))
    cdef int i
    if keys == NULL or smasks == NULL or ssizes == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            keys[i] = ((<u64>(0xFFFFFFFF - <unsigned int> sizes[i])) << 32) | <unsigned int> i
        qsort(keys, k, sizeof(u64), _cmp_u64)
        for i in range(k):
            orig[i] = <int> (keys[i] & 0xFFFFFFFF)
            smasks[i] = masks[orig[i]]
            ssizes[i] = sizes[orig[i]]
        st.k = k
        st.m = m
        st.node_cap = node_cap
        st.nodes = 0
        st.capped = False
        st.best_gain = 0
        st.best_len = 0
        # search uses the sorted copies; keep them alive for the call
        st.masks = smasks
        st.sizes = ssizes
        _pack_dfs(st, 0, 0, 0, 0)
        st.masks = NULL
        st.sizes = NULL
        return 0
    finally:
        free(keys)
        free(smasks)
        free(ssizes)


def max_packing(masks, sizes, int m, node_cap):
    cdef int k = len(masks)
    cdef int i
    if k == 0:
        return 0, [], 0, True
    cdef u64 *cmasks = <u64 *> malloc(sizeof(u64) * k)
    cdef int *csizes = <int *> malloc(sizeof(int) * k)
    cdef int *orig = <int *> malloc(sizeof(int) * k)
    cdef PackState st
    st.best_set = <int *> malloc(sizeof(int) * (k + 1))
    st.chosen = <int *> malloc(sizeof(int) * (k + 1))
    if cmasks == NULL or csizes == NULL or orig == NULL or \
            st.best_set == NULL or st.chosen == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            cmasks[i] = masks[i]
            csizes[i] = sizes[i]
        _pack_run(cmasks, csizes, k, m, <u64> node_cap, &st, orig)
        chosen = sorted(orig[st.best_set[i]] for i in range(st.best_len))
        return st.best_gain, chosen, st.nodes, not st.capped
    finally:
        free(cmasks)
        free(csizes)
        free(orig)
        free(st.best_set)
        free(st.chosen)


cdef struct CoverState:
    u64 *masks          # original index order
    int k
    int m
    bint allow_singles
    int lmax
    u64 node_cap
    u64 nodes
    bint capped
    int best_count
    int *best_set       # original indices
    int best_len
    u64 best_singles
    int *chosen
    int *cbe            # per-edge candidate lists, size-desc order
    int *cbe_off
    int *cbe_cnt


cdef void _cover_dfs(CoverState *st, u64 unc, int count, int depth, u64 singles) noexcept nogil:
    cdef int be, bl, e, i, j
    cdef u64 f, b
    if count + (_popll(unc) + st.lmax - 1) // st.lmax >= st.best_count:
        return
    if unc == 0:
        st.best_count = count
        st.best_len = depth
        for i in range(depth):
            st.best_set[i] = st.chosen[i]
        st.best_singles = singles
        return
    if st.nodes > st.node_cap:
        st.capped = True
        return
    be = -1
    bl = -1
    f = unc
    while f:
        b = f & (~f + 1)
        e = _ctzll(b)
        if bl < 0 or st.cbe_cnt[e] < bl:
            be = e
            bl = st.cbe_cnt[e]
        f ^= b
    for j in range(st.cbe_cnt[be]):
        i = st.cbe[st.cbe_off[be] + j]
        st.nodes += 1
        if st.nodes > st.node_cap:
            st.capped = True
            return
        st.chosen[depth] = i
        _cover_dfs(st, unc & ~st.masks[i], count + 1, depth + 1, singles)
    if st.allow_singles:
        st.nodes += 1
        _cover_dfs(st, unc & ~((<u64>1) << be), count + 1, depth, singles | ((<u64>1) << be))


cdef int _cover_run(u64 *cmasks, int *csizes, int k, int m, bint allow_singles,
                    u64 node_cap, CoverState *st) except -1:
    """Builds per-edge lists, greedy bound, then the exact search.
    st.best_count == 1000000000 afterwards means infeasible/incomplete.
    Caller provides best_set/chosen/cbe_off/cbe_cnt; cbe is allocated here
    and must be freed by the caller (st.cbe)."""
    cdef u64 full, unc, f, b
    cdef int i, j, e, bi, bc, c, g_len, total
    cdef u64 *keys
    cdef int *order
    st.cbe = NULL
    if m == 0:
        st.best_count = 0
        st.best_len = 0
        st.best_singles = 0
        st.nodes = 0
        st.capped = False
        return 0
    full = ((<u64>1) << m) - 1 if m < 64 else <u64>0xFFFFFFFFFFFFFFFF
    total = 0
    for i in range(k):
        total += _popll(cmasks[i])
    st.cbe = <int *> malloc(sizeof(int) * (total + 1))
    keys = <u64 *> malloc(sizeof(u64) * (k + 1))
    order = <int *> malloc(sizeof(int) * (k + 1))
    if st.cbe == NULL or keys == NULL or order == NULL:
        if keys != NULL:
            free(keys)
        if order != NULL:
            free(order)
        raise MemoryError()
    try:
        for i in range(k):
            keys[i] = ((<u64>(0xFFFFFFFF - <unsigned int> csizes[i])) << 32) | <unsigned int> i
        qsort(keys, k, sizeof(u64), _cmp_u64)
        for i in range(k):
            order[i] = <int> (keys[i] & 0xFFFFFFFF)
        for e in range(m):
            st.cbe_cnt[e] = 0
        for j in range(k):
            f = cmasks[order[j]]
            while f:
                b = f & (~f + 1)
                st.cbe_cnt[_ctzll(b)] += 1
                f ^= b
        st.cbe_off[0] = 0
        for e in range(m):
            st.cbe_off[e + 1] = st.cbe_off[e] + st.cbe_cnt[e]
            st.cbe_cnt[e] = 0
        for j in range(k):
            i = order[j]
            f = cmasks[i]
            while f:
                b = f & (~f + 1)
                e = _ctzll(b)
                st.cbe[st.cbe_off[e] + st.cbe_cnt[e]] = i
                st.cbe_cnt[e] += 1
                f ^= b
        if not allow_singles:
            for e in range(m):
                if st.cbe_cnt[e] == 0:
                    st.best_count = 1000000000
                    st.best_len = 0
                    st.best_singles = 0
                    st.nodes = 0
                    st.capped = False
                    return 1  # infeasible, proven
        st.masks = cmasks
        st.k = k
        st.m = m
        st.allow_singles = allow_singles
        st.lmax = 1
        for i in range(k):
            if csizes[i] > st.lmax:
                st.lmax = csizes[i]
        # greedy upper bound, original index order
        unc = full
        g_len = 0
        while unc:
            bi = -1
            bc = 0
            for i in range(k):
                c = _popll(cmasks[i] & unc)
                if c > bc:
                    bi = i
                    bc = c
            if bi < 0 or bc <= 1:
                break
            st.best_set[g_len] = bi
            g_len += 1
            unc &= ~cmasks[bi]
        if allow_singles:
            st.best_count = g_len + _popll(unc)
        elif unc == 0:
            st.best_count = g_len
        else:
            st.best_count = 1000000000
        st.best_len = g_len
        st.best_singles = unc
        st.node_cap = node_cap
        st.nodes = 0
        st.capped = False
        _cover_dfs(st, full, 0, 0, 0)
        return 0
    finally:
        free(keys)
        free(order)


def min_cover(masks, sizes, int m, allow_singles, node_cap):
    cdef int k = len(masks)
    cdef int i, rc
    cdef CoverState st
    cdef u64 *cmasks = <u64 *> malloc(sizeof(u64) * (k + 1))
    cdef int *csizes = <int *> malloc(sizeof(int) * (k + 1))
    st.best_set = <int *> malloc(sizeof(int) * (m + k + 2))
    st.chosen = <int *> malloc(sizeof(int) * (m + k + 2))
    st.cbe_off = <int *> malloc(sizeof(int) * (m + 2))
    st.cbe_cnt = <int *> malloc(sizeof(int) * (m + 2))
    st.cbe = NULL
    if cmasks == NULL or csizes == NULL or st.best_set == NULL or \
            st.chosen == NULL or st.cbe_off == NULL or st.cbe_cnt == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            cmasks[i] = masks[i]
            csizes[i] = sizes[i]
        _cover_run(cmasks, csizes, k, m, bool(allow_singles), <u64> node_cap, &st)
        if st.best_count >= 1000000000:
            return -1, [], 0, st.nodes, not st.capped
        chosen = sorted(st.best_set[i] for i in range(st.best_len))
        return st.best_count, chosen, st.best_singles, st.nodes, not st.capped
    finally:
        free(cmasks)
        free(csizes)
        free(st.best_set)
        free(st.chosen)
        free(st.cbe_off)
        free(st.cbe_cnt)
        if st.cbe != NULL:
            free(st.cbe)


# -- composite per-graph oracles (no Python-object churn in the middle) --------


def ce_exact(int n, us, vs, cycle_limit, node_cap):
    cdef int eu[64]
    cdef int ev[64]
    cdef int m = _fill_edges(us, vs, eu, ev)
    cdef CycleBuf buf
    cdef PackState st
    cdef int *orig = NULL
    cdef int i, rc
    if not _buf_init(&buf, <int> cycle_limit):
        raise MemoryError()
    st.best_set = NULL
    st.chosen = NULL
    try:
        rc = _enumerate_cycles(n, m, eu, ev, &buf)
        if rc < 0:
            return -1, [], -1, 0, False
        orig = <int *> malloc(sizeof(int) * (buf.count + 1))
        st.best_set = <int *> malloc(sizeof(int) * (buf.count + 1))
        st.chosen = <int *> malloc(sizeof(int) * (buf.count + 1))
        if orig == NULL or st.best_set == NULL or st.chosen == NULL:
            raise MemoryError()
        _pack_run(buf.masks, buf.sizes, buf.count, m, <u64> node_cap, &st, orig)
        chosen_masks = sorted(
            buf.masks[orig[st.best_set[i]]] for i in range(st.best_len)
        )
        return m - st.best_gain, chosen_masks, buf.count, st.nodes, not st.capped
    finally:
        _buf_free(&buf)
        if orig != NULL:
            free(orig)
        if st.best_set != NULL:
            free(st.best_set)
        if st.chosen != NULL:
            free(st.chosen)


def gce_exact(int n, us, vs, cycle_limit, node_cap):
    cdef int eu[64]
    cdef int ev[64]
    cdef int m = _fill_edges(us, vs, eu, ev)
    cdef CycleBuf buf
    cdef CoverState st
    cdef int i, rc
    if not _buf_init(&buf, <int> cycle_limit):
        raise MemoryError()
    st.best_set = NULL
    st.chosen = NULL
    st.cbe_off = NULL
    st.cbe_cnt = NULL
    st.cbe = NULL
    try:
        rc = _enumerate_cycles(n, m, eu, ev, &buf)
        if rc < 0:
            return -1, [], 0, -1, 0, False
        st.best_set = <int *> malloc(sizeof(int) * (m + buf.count + 2))
        st.chosen = <int *> malloc(sizeof(int) * (m + buf.count + 2))
        st.cbe_off = <int *> malloc(sizeof(int) * (m + 2))
        st.cbe_cnt = <int *> malloc(sizeof(int) * (m + 2))
        if st.best_set == NULL or st.chosen == NULL or \
                st.cbe_off == NULL or st.cbe_cnt == NULL:
            raise MemoryError()
        _cover_run(buf.masks, buf.sizes, buf.count, m, True, <u64> node_cap, &st)
        if st.best_count >= 1000000000:
            return -1, [], 0, buf.count, st.nodes, not st.capped
        chosen_masks = sorted(buf.masks[st.best_set[i]] for i in range(st.best_len))
        return (st.best_count, chosen_masks, st.best_singles, buf.count,
                st.nodes, not st.capped)
    finally:
        _buf_free(&buf)
        if st.best_set != NULL:
            free(st.best_set)
        if st.chosen != NULL:
            free(st.chosen)
        if st.cbe_off != NULL:
            free(st.cbe_off)
        if st.cbe_cnt != NULL:
            free(st.cbe_cnt)
        if st.cbe != NULL:
            free(st.cbe)


def fan_exact(int n, us, vs, cycle_limit, node_cap):
    cdef int eu[64]
    cdef int ev[64]
    cdef int m = _fill_edges(us, vs, eu, ev)
    cdef CycleBuf buf
    cdef CoverState st
    cdef int i, rc
    if not _buf_init(&buf, <int> cycle_limit):
        raise MemoryError()
    st.best_set = NULL
    st.chosen = NULL
    st.cbe_off = NULL
    st.cbe_cnt = NULL
    st.cbe = NULL
    try:
        rc = _enumerate_cycles(n, m, eu, ev, &buf)
        if rc < 0:
            return -1, [], -1, 0, False
        st.best_set = <int *> malloc(sizeof(int) * (m + buf.count + 2))
        st.chosen = <int *> malloc(sizeof(int) * (m + buf.count + 2))
        st.cbe_off = <int *> malloc(sizeof(int) * (m + 2))
        st.cbe_cnt = <int *> malloc(sizeof(int) * (m + 2))
        if st.best_set == NULL or st.chosen == NULL or \
                st.cbe_off == NULL or st.cbe_cnt == NULL:
            raise MemoryError()
        _cover_run(buf.masks, buf.sizes, buf.count, m, False, <u64> node_cap, &st)
        if st.best_count >= 1000000000:
            return -1, [], buf.count, st.nodes, not st.capped
        chosen_masks = sorted(buf.masks[st.best_set[i]] for i in range(st.best_len))
        return st.best_count, chosen_masks, buf.count, st.nodes, not st.capped
    finally:
        _buf_free(&buf)
        if st.best_set != NULL:
            free(st.best_set)
        if st.chosen != NULL:
            free(st.chosen)
        if st.cbe_off != NULL:
            free(st.cbe_off)
        if st.cbe_cnt != NULL:
            free(st.cbe_cnt)
        if st.cbe != NULL:
            free(st.cbe)
