# cython: language_level=3
"""Compiled search kernels.

Cython twin of ``_kernels_py``: subset dynamic programming, branch-and-bound
path search, milestone-constrained path search, and color-coded long-path
trials.  Every routine reproduces the pure backend exactly (traversal order,
node accounting, tie-breaking, witnesses, PRNG stream), so the two are
interchangeable and the equivalence tests can diff them result by result.

Vertex sets live in C uint64 word arrays here instead of Python integers;
since all set operations are order-free algebra and every tie-break reads the
lowest set bit, results cannot drift between the representations.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define dt_popcount64(x) __builtin_popcountll((unsigned long long)(x))
    #define dt_ctz64(x) __builtin_ctzll((unsigned long long)(x))
    #else
    static int dt_popcount64(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static int dt_ctz64(unsigned long long x)
    { int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int dt_popcount64(unsigned long long x) noexcept nogil
    int dt_ctz64(unsigned long long x) noexcept nogil

BACKEND_NAME = "compiled"

MASK64 = (1 << 64) - 1

cdef uint64_t XS_MULT = 0x2545F4914F6CDD1DULL
cdef uint64_t XS_SEED_FILL = 0x9E3779B97F4A7C15ULL

MODE_MAX = 0
MODE_ATLEAST = 1
MODE_EXACT = 2

cdef int C_MODE_MAX = 0
cdef int C_MODE_ATLEAST = 1
cdef int C_MODE_EXACT = 2

# Subset DP tables hold 2**n entries; past this the table does not fit in
# memory on any realistic host, matching where the pure backend also dies.
cdef int DP_MAX_N = 26


cdef inline uint64_t xs_next(uint64_t *state) noexcept nogil:
    cdef uint64_t x = state[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    state[0] = x
    return x * XS_MULT


def xorshift_step(state):
    """Advance the xorshift64* generator once; return (new_state, output)."""
    cdef uint64_t x = <uint64_t> (state & MASK64)
    cdef uint64_t out = xs_next(&x)
    return x, out


def xorshift_stream(seed, count):
    """First ``count`` outputs for ``seed``; used to pin backend parity."""
    cdef uint64_t state = <uint64_t> (seed & MASK64)
    if state == 0:
        state = XS_SEED_FILL
    out = []
    cdef Py_ssize_t i
    for i in range(count):
        out.append(xs_next(&state))
    return out


# ---------------------------------------------------------------------------
# Shared graph buffers: adjacency in CSR form (list order preserved) plus
# per-vertex out- and in-neighborhood bitsets of ``words`` uint64 words.


cdef struct Graph:
    int n
    int words
    int *off
    int *nbr
    uint64_t *adjb
    uint64_t *inb


cdef int graph_init(Graph *g, object adj, bint want_inb) except -1:
    cdef int n = len(adj)
    cdef int words = (n + 63) >> 6 if n > 0 else 1
    cdef Py_ssize_t m = 0
    cdef object row
    for row in adj:
        m += len(row)
    g.n = n
    g.words = words
    g.off = <int *> malloc((n + 1) * sizeof(int))
    g.nbr = <int *> malloc((m if m > 0 else 1) * sizeof(int))
    g.adjb = <uint64_t *> calloc((n if n > 0 else 1) * words, sizeof(uint64_t))
    g.inb = NULL
    if want_inb:
        g.inb = <uint64_t *> calloc((n if n > 0 else 1) * words, sizeof(uint64_t))
    if g.off == NULL or g.nbr == NULL or g.adjb == NULL or (want_inb and g.inb == NULL):
        graph_free(g)
        raise MemoryError("graph buffers")
    cdef Py_ssize_t pos = 0
    cdef int u = 0
    cdef int v
    for row in adj:
        g.off[u] = <int> pos
        for v in row:
            if v < 0 or v >= n:
                graph_free(g)
                raise ValueError("neighbor out of range")
            g.nbr[pos] = v
            g.adjb[u * words + (v >> 6)] |= (<uint64_t> 1) << (v & 63)
            if want_inb:
                g.inb[v * words + (u >> 6)] |= (<uint64_t> 1) << (u & 63)
            pos += 1
        u += 1
    g.off[n] = <int> pos
    return 0


cdef void graph_free(Graph *g) noexcept:
    if g.off != NULL:
        free(g.off)
        g.off = NULL
    if g.nbr != NULL:
        free(g.nbr)
        g.nbr = NULL
    if g.adjb != NULL:
        free(g.adjb)
        g.adjb = NULL
    if g.inb != NULL:
        free(g.inb)
        g.inb = NULL


cdef inline bint bit_test(uint64_t *b, int v) noexcept nogil:
    return (b[v >> 6] >> (v & 63)) & 1


cdef inline void bit_set(uint64_t *b, int v) noexcept nogil:
    b[v >> 6] |= (<uint64_t> 1) << (v & 63)


cdef inline void bit_clear(uint64_t *b, int v) noexcept nogil:
    b[v >> 6] &= ~((<uint64_t> 1) << (v & 63))


cdef inline int bits_pop(uint64_t *b, int words) noexcept nogil:
    cdef int i
    cdef int c = 0
    for i in range(words):
        c += dt_popcount64(b[i])
    return c


cdef inline int bits_lowest(uint64_t *b, int words) noexcept nogil:
    cdef int i
    for i in range(words):
        if b[i]:
            return (i << 6) + dt_ctz64(b[i])
    return -1


# Bitset of vertices reachable from ``start`` through vertices outside
# ``visited`` (``start`` itself is always included).  Mirrors the pure
# backend's flood fill: there seen = blocked | {start}, and at every call
# site blocked | {start} equals visited | {start}.
cdef void reach_from(Graph *g, int start, uint64_t *visited,
                     uint64_t *acc, uint64_t *seen, uint64_t *frontier,
                     uint64_t *nxt) noexcept nogil:
    cdef int words = g.words
    cdef int i, i2, u, base
    cdef uint64_t m
    memcpy(seen, visited, words * sizeof(uint64_t))
    bit_set(seen, start)
    memset(acc, 0, words * sizeof(uint64_t))
    bit_set(acc, start)
    memset(frontier, 0, words * sizeof(uint64_t))
    bit_set(frontier, start)
    cdef bint any_new = True
    while any_new:
        memset(nxt, 0, words * sizeof(uint64_t))
        for i in range(words):
            m = frontier[i]
            base = i << 6
            while m:
                u = base + dt_ctz64(m)
                m &= m - 1
                for i2 in range(words):
                    nxt[i2] |= g.adjb[u * words + i2]
        any_new = False
        for i in range(words):
            nxt[i] &= ~seen[i]
            if nxt[i]:
                any_new = True
            seen[i] |= nxt[i]
            acc[i] |= nxt[i]
            frontier[i] = nxt[i]


# ---------------------------------------------------------------------------
# Subset DP: dp[mask] = bitset of endpoints v such that some simple path
# covering exactly ``mask`` ends at v.  Single-word bitsets; the table is
# capped at DP_MAX_N vertices because it has 2**n entries.


cdef uint64_t *dp_fill(object adj, int n, int start) except NULL:
    cdef size_t size = (<size_t> 1) << n
    cdef uint64_t *dp = <uint64_t *> calloc(size, sizeof(uint64_t))
    if dp == NULL:
        raise MemoryError("subset table")
    cdef uint64_t *adjb = <uint64_t *> calloc(n if n > 0 else 1, sizeof(uint64_t))
    if adjb == NULL:
        free(dp)
        raise MemoryError("subset table")
    cdef int u = 0
    cdef int w
    cdef object row
    for row in adj:
        for w in row:
            adjb[u] |= (<uint64_t> 1) << w
        u += 1
    cdef int v
    if start < 0:
        for v in range(n):
            dp[(<size_t> 1) << v] = (<uint64_t> 1) << v
    else:
        dp[(<size_t> 1) << start] = (<uint64_t> 1) << start
    cdef size_t mask
    cdef uint64_t ends, m, ext, lw
    with nogil:
        for mask in range(size):
            ends = dp[mask]
            if not ends:
                continue
            m = ends
            while m:
                v = dt_ctz64(m)
                m &= m - 1
                ext = adjb[v] & ~(<uint64_t> mask)
                while ext:
                    lw = ext & (~ext + 1)
                    dp[mask | <size_t> lw] |= lw
                    ext ^= lw
    free(adjb)
    return dp


cdef uint64_t *in_bits_words(object adj, int n) except NULL:
    cdef uint64_t *inb = <uint64_t *> calloc(n if n > 0 else 1, sizeof(uint64_t))
    if inb == NULL:
        raise MemoryError("in-neighbor bitsets")
    cdef int u = 0
    cdef int v
    cdef object row
    for row in adj:
        for v in row:
            inb[v] |= (<uint64_t> 1) << u
        u += 1
    return inb


cdef list walk_back(uint64_t *inb, uint64_t *dp, uint64_t mask, int v):
    cdef list path = [v]
    cdef uint64_t prev_mask, cands
    cdef int u
    while mask != (<uint64_t> 1) << v:
        prev_mask = mask & ~((<uint64_t> 1) << v)
        cands = dp[<size_t> prev_mask] & inb[v]
        u = dt_ctz64(cands)
        path.append(u)
        mask = prev_mask
        v = u
    path.reverse()
    return path


cdef inline int dp_guard(int n) except -1:
    if n > DP_MAX_N:
        raise MemoryError(f"subset table needs 2**{n} entries")
    return 0


def longest_path(adj):
    """Longest simple path anywhere in the graph: (arc count, vertex list)."""
    cdef int n = len(adj)
    if n == 0:
        return -1, None
    dp_guard(n)
    cdef uint64_t *dp = dp_fill(adj, n, -1)
    cdef size_t size = (<size_t> 1) << n
    cdef size_t mask
    cdef size_t best_mask = 0
    cdef int best_pop = 0
    cdef int pop
    with nogil:
        for mask in range(size):
            if dp[mask]:
                pop = dt_popcount64(mask)
                if pop > best_pop:
                    best_pop = pop
                    best_mask = mask
    cdef uint64_t ends = dp[best_mask]
    cdef int v = dt_ctz64(ends)
    cdef uint64_t *inb
    try:
        inb = in_bits_words(adj, n)
    except MemoryError:
        free(dp)
        raise
    path = walk_back(inb, dp, <uint64_t> best_mask, v)
    free(inb)
    free(dp)
    return best_pop - 1, path


def longest_path_from_to(adj, s, t):
    """Longest simple (s, t)-path; (-1, None) if t is not simple-path
    reachable from s."""
    cdef int n = len(adj)
    dp_guard(n)
    if not (0 <= s < n and 0 <= t < n):
        raise ValueError("endpoint out of range")
    cdef int ti = t
    cdef uint64_t *dp = dp_fill(adj, n, s)
    cdef size_t size = (<size_t> 1) << n
    cdef uint64_t tb = (<uint64_t> 1) << ti
    cdef size_t mask
    cdef size_t best_mask = 0
    cdef bint have = False
    cdef int best_pop = 0
    cdef int pop
    with nogil:
        for mask in range(size):
            if dp[mask] & tb:
                pop = dt_popcount64(mask)
                if pop > best_pop:
                    best_pop = pop
                    best_mask = mask
                    have = True
    if not have:
        free(dp)
        return -1, None
    cdef uint64_t *inb
    try:
        inb = in_bits_words(adj, n)
    except MemoryError:
        free(dp)
        raise
    path = walk_back(inb, dp, <uint64_t> best_mask, ti)
    free(inb)
    free(dp)
    return best_pop - 1, path


def exact_path(adj, s, arcs, t):
    """A simple path from s with exactly ``arcs`` arcs, ending at t
    (or anywhere when t < 0).  None if no such path exists."""
    cdef int n = len(adj)
    cdef long long arcs_c = arcs
    if arcs_c < 0 or arcs_c > n - 1:
        return None
    dp_guard(n)
    if not (0 <= s < n) or t >= n:
        raise ValueError("endpoint out of range")
    cdef int ti = t
    cdef uint64_t *dp = dp_fill(adj, n, s)
    cdef size_t size = (<size_t> 1) << n
    cdef uint64_t tb = ((<uint64_t> 1) << ti) if ti >= 0 else 0
    cdef int want = <int> arcs_c + 1
    cdef size_t mask
    cdef size_t hit_mask = 0
    cdef bint have = False
    cdef int v = -1
    cdef uint64_t ends
    with nogil:
        for mask in range(size):
            ends = dp[mask]
            if not ends or dt_popcount64(mask) != want:
                continue
            if ti >= 0:
                if not ends & tb:
                    continue
                v = ti
            else:
                v = dt_ctz64(ends)
            hit_mask = mask
            have = True
            break
    if not have:
        free(dp)
        return None
    cdef uint64_t *inb
    try:
        inb = in_bits_words(adj, n)
    except MemoryError:
        free(dp)
        raise
    path = walk_back(inb, dp, <uint64_t> hit_mask, v)
    free(inb)
    free(dp)
    return path


def feasible_lengths(adj, s, t):
    """Bitmask over arc counts L such that a simple (s, t)-path with exactly
    L arcs exists."""
    cdef int n = len(adj)
    dp_guard(n)
    if not (0 <= s < n and 0 <= t < n):
        raise ValueError("endpoint out of range")
    cdef uint64_t *dp = dp_fill(adj, n, s)
    cdef size_t size = (<size_t> 1) << n
    cdef uint64_t tb = (<uint64_t> 1) << <int> t
    cdef uint64_t out = 0
    cdef size_t mask
    with nogil:
        for mask in range(size):
            if dp[mask] & tb:
                out |= (<uint64_t> 1) << (dt_popcount64(mask) - 1)
    free(dp)
    return int(out)


# ---------------------------------------------------------------------------
# Branch and bound.  One routine, three modes (see the pure backend for the
# contract).  The recursion carries shared buffers: a visited bitset whose
# bits are set before each child call and cleared after, a path stack, and
# flood-fill scratch reused across nodes.


cdef struct BnbState:
    Graph *g
    int mode
    int t
    long long bound
    uint64_t budget
    uint64_t nodes
    bint aborted
    bint found
    long long best_len
    int best_count  # vertices in best path; -1 = none
    int path_count
    uint64_t *visited
    int *path
    int *best
    uint64_t *acc
    uint64_t *seen
    uint64_t *frontier
    uint64_t *nxt


cdef bint bnb_dfs(BnbState *st, int v, long long length) noexcept nogil:
    st.nodes += 1
    if st.nodes > st.budget:
        st.aborted = True
        return True
    st.path[st.path_count] = v
    st.path_count += 1
    cdef bint stop = False
    cdef bint at_goal = st.t < 0 or v == st.t
    cdef bint ok
    cdef long long ub
    cdef int i, w
    if st.mode == C_MODE_MAX:
        if at_goal and length > st.best_len:
            st.best_len = length
            st.best_count = st.path_count
            memcpy(st.best, st.path, st.path_count * sizeof(int))
    elif st.mode == C_MODE_ATLEAST:
        if at_goal and length >= st.bound:
            st.best_len = length
            st.best_count = st.path_count
            memcpy(st.best, st.path, st.path_count * sizeof(int))
            st.found = True
            stop = True
    else:
        if at_goal and length == st.bound:
            st.best_len = length
            st.best_count = st.path_count
            memcpy(st.best, st.path, st.path_count * sizeof(int))
            st.found = True
            stop = True
    if not stop:
        ok = not (st.mode == C_MODE_EXACT and length >= st.bound)
        if ok:
            reach_from(st.g, v, st.visited, st.acc, st.seen, st.frontier, st.nxt)
            if st.t >= 0 and not bit_test(st.acc, st.t):
                ok = False
            else:
                ub = length + bits_pop(st.acc, st.g.words) - 1
                if st.mode == C_MODE_MAX:
                    ok = ub > st.best_len
                else:
                    ok = ub >= st.bound
        if ok:
            for i in range(st.g.off[v], st.g.off[v + 1]):
                w = st.g.nbr[i]
                if bit_test(st.visited, w):
                    continue
                bit_set(st.visited, w)
                if bnb_dfs(st, w, length + 1):
                    bit_clear(st.visited, w)
                    stop = True
                    break
                bit_clear(st.visited, w)
    st.path_count -= 1
    return stop


def bnb_path(adj, s, t, mode, bound, budget):
    cdef Graph g
    graph_init(&g, adj, False)
    cdef int n = g.n
    cdef int words = g.words
    if s >= n or t >= n:
        graph_free(&g)
        raise ValueError("endpoint out of range")
    cdef BnbState st
    st.g = &g
    st.mode = mode
    st.t = t
    st.bound = bound
    st.budget = <uint64_t> min(budget, MASK64) if budget >= 0 else 0
    st.nodes = 0
    st.aborted = False
    st.found = False
    st.best_len = -1
    st.best_count = -1
    st.path_count = 0
    st.visited = <uint64_t *> calloc(words, sizeof(uint64_t))
    st.path = <int *> malloc((n + 1) * sizeof(int))
    st.best = <int *> malloc((n + 1) * sizeof(int))
    st.acc = <uint64_t *> malloc(words * sizeof(uint64_t))
    st.seen = <uint64_t *> malloc(words * sizeof(uint64_t))
    st.frontier = <uint64_t *> malloc(words * sizeof(uint64_t))
    st.nxt = <uint64_t *> malloc(words * sizeof(uint64_t))
    if (st.visited == NULL or st.path == NULL or st.best == NULL
            or st.acc == NULL or st.seen == NULL or st.frontier == NULL
            or st.nxt == NULL):
        bnb_cleanup(&st, &g)
        raise MemoryError("search buffers")
    cdef int si = s
    cdef int v0
    try:
        with nogil:
            if si >= 0:
                bit_set(st.visited, si)
                bnb_dfs(&st, si, 0)
            else:
                for v0 in range(n):
                    memset(st.visited, 0, words * sizeof(uint64_t))
                    bit_set(st.visited, v0)
                    if bnb_dfs(&st, v0, 0):
                        break
        found = st.found
        if st.mode == C_MODE_MAX:
            found = st.best_len >= 0
        best_path = None
        if st.best_count >= 0:
            best_path = [st.best[i] for i in range(st.best_count)]
        return found, <long long> st.best_len, best_path, not st.aborted, int(st.nodes)
    finally:
        bnb_cleanup(&st, &g)


cdef void bnb_cleanup(BnbState *st, Graph *g) noexcept:
    if st.visited != NULL:
        free(st.visited)
    if st.path != NULL:
        free(st.path)
    if st.best != NULL:
        free(st.best)
    if st.acc != NULL:
        free(st.acc)
    if st.seen != NULL:
        free(st.seen)
    if st.frontier != NULL:
        free(st.frontier)
    if st.nxt != NULL:
        free(st.nxt)
    graph_free(g)


# ---------------------------------------------------------------------------
# Milestone path search: a simple path s -> ... -> w -> ... -> v -> ... -> t
# (v == t collapses the last leg), pruned by staged reachability.  Same
# shared-buffer scheme as the branch and bound.


cdef struct ChainState:
    Graph *g
    int ms0
    int ms1
    int ms2
    uint64_t budget
    uint64_t nodes
    bint aborted
    bint found
    int result_count  # -1 = none
    int path_count
    uint64_t *visited
    int *path
    int *result
    uint64_t *acc
    uint64_t *seen
    uint64_t *frontier
    uint64_t *nxt


cdef inline int chain_ms(ChainState *st, int j) noexcept nogil:
    if j == 0:
        return st.ms0
    if j == 1:
        return st.ms1
    return st.ms2


cdef bint chain_dfs(ChainState *st, int x, int ph) noexcept nogil:
    st.nodes += 1
    if st.nodes > st.budget:
        st.aborted = True
        return True
    while ph < 3 and x == chain_ms(st, ph):
        ph += 1
    st.path[st.path_count] = x
    st.path_count += 1
    cdef bint stop = False
    cdef bint ok
    cdef int j, start, i, y
    if ph == 3:
        st.found = True
        st.result_count = st.path_count
        memcpy(st.result, st.path, st.path_count * sizeof(int))
        stop = True
    else:
        ok = True
        start = x
        # Every leg floods with seen = visited | {start}: for the first leg
        # start is x itself (already visited), for later legs start is the
        # milestone just reached, which visited cannot contain yet.
        for j in range(ph, 3):
            reach_from(st.g, start, st.visited, st.acc, st.seen,
                       st.frontier, st.nxt)
            if not bit_test(st.acc, chain_ms(st, j)):
                ok = False
                break
            start = chain_ms(st, j)
        if ok:
            for i in range(st.g.off[x], st.g.off[x + 1]):
                y = st.g.nbr[i]
                if bit_test(st.visited, y):
                    continue
                if ph == 0 and (y == st.ms1 or y == st.ms2):
                    continue
                if ph == 1 and y == st.ms2 and st.ms1 != st.ms2:
                    continue
                bit_set(st.visited, y)
                if chain_dfs(st, y, ph):
                    bit_clear(st.visited, y)
                    stop = True
                    break
                bit_clear(st.visited, y)
    st.path_count -= 1
    return stop


def chain_path(adj, s, w, v, t, budget):
    cdef Graph g
    graph_init(&g, adj, False)
    cdef int n = g.n
    cdef int words = g.words
    if not (0 <= s < n and 0 <= w < n and 0 <= v < n and 0 <= t < n):
        graph_free(&g)
        raise ValueError("milestone out of range")
    cdef ChainState st
    st.g = &g
    st.ms0 = w
    st.ms1 = v
    st.ms2 = t
    st.budget = <uint64_t> min(budget, MASK64) if budget >= 0 else 0
    st.nodes = 0
    st.aborted = False
    st.found = False
    st.result_count = -1
    st.path_count = 0
    st.visited = <uint64_t *> calloc(words, sizeof(uint64_t))
    st.path = <int *> malloc((n + 1) * sizeof(int))
    st.result = <int *> malloc((n + 1) * sizeof(int))
    st.acc = <uint64_t *> malloc(words * sizeof(uint64_t))
    st.seen = <uint64_t *> malloc(words * sizeof(uint64_t))
    st.frontier = <uint64_t *> malloc(words * sizeof(uint64_t))
    st.nxt = <uint64_t *> malloc(words * sizeof(uint64_t))
    if (st.visited == NULL or st.path == NULL or st.result == NULL
            or st.acc == NULL or st.seen == NULL or st.frontier == NULL
            or st.nxt == NULL):
        chain_cleanup(&st, &g)
        raise MemoryError("search buffers")
    cdef int si = s
    try:
        with nogil:
            bit_set(st.visited, si)
            chain_dfs(&st, si, 0)
        result = None
        if st.result_count >= 0:
            result = [st.result[i] for i in range(st.result_count)]
        return st.found, result, not st.aborted, int(st.nodes)
    finally:
        chain_cleanup(&st, &g)


cdef void chain_cleanup(ChainState *st, Graph *g) noexcept:
    if st.visited != NULL:
        free(st.visited)
    if st.path != NULL:
        free(st.path)
    if st.result != NULL:
        free(st.result)
    if st.acc != NULL:
        free(st.acc)
    if st.seen != NULL:
        free(st.seen)
    if st.frontier != NULL:
        free(st.frontier)
    if st.nxt != NULL:
        free(st.nxt)
    graph_free(g)


# ---------------------------------------------------------------------------
# Color coding.  Same contract and the same xorshift64* stream as the pure
# backend, so both backends see identical colorings trial for trial.


def color_coding(adj, min_arcs, trials, seed):
    cdef int n = len(adj)
    if n == 0:
        return False, None, 0
    cdef long long min_arcs_c = min_arcs
    if min_arcs_c <= 0:
        return True, [0], 0
    cdef int k1 = <int> min_arcs_c + 1
    if k1 > n:
        return False, None, 0
    if k1 > DP_MAX_N:
        raise MemoryError(f"color table needs 2**{k1} entries")
    cdef uint64_t state = <uint64_t> (seed & MASK64)
    if state == 0:
        state = XS_SEED_FILL
    cdef Graph g
    graph_init(&g, adj, True)
    cdef int words = g.words
    cdef size_t size = (<size_t> 1) << k1
    cdef size_t full = size - 1
    cdef uint64_t *f = <uint64_t *> malloc(size * words * sizeof(uint64_t))
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef uint64_t *cands = <uint64_t *> malloc(words * sizeof(uint64_t))
    if f == NULL or colors == NULL or cands == NULL:
        if f != NULL:
            free(f)
        if colors != NULL:
            free(colors)
        if cands != NULL:
            free(cands)
        graph_free(&g)
        raise MemoryError("color tables")
    cdef long long trials_c = trials
    cdef long long trial = 0
    cdef int vtx, i, x, y, u, base, vv, cb
    cdef size_t cs, prev
    cdef uint64_t m
    cdef bint hit = False
    try:
        with nogil:
            for trial in range(trials_c):
                for vtx in range(n):
                    colors[vtx] = <int> (xs_next(&state) % <uint64_t> k1)
                memset(f, 0, size * words * sizeof(uint64_t))
                for vtx in range(n):
                    bit_set(f + ((<size_t> 1) << colors[vtx]) * words, vtx)
                for cs in range(size):
                    for i in range(words):
                        m = f[cs * words + i]
                        base = i << 6
                        while m:
                            x = base + dt_ctz64(m)
                            m &= m - 1
                            for u in range(g.off[x], g.off[x + 1]):
                                y = g.nbr[u]
                                cb = colors[y]
                                if not (cs >> cb) & 1:
                                    bit_set(f + (cs | ((<size_t> 1) << cb)) * words, y)
                hit = False
                for i in range(words):
                    if f[full * words + i]:
                        hit = True
                        break
                if hit:
                    break
        if not hit:
            return False, None, int(trials_c)
        vv = bits_lowest(f + full * words, words)
        cs = full
        out_path = [vv]
        while dt_popcount64(<uint64_t> cs) > 1:
            prev = cs & ~((<size_t> 1) << colors[vv])
            for i in range(words):
                cands[i] = f[prev * words + i] & g.inb[vv * words + i]
            u = bits_lowest(cands, words)
            out_path.append(u)
            cs = prev
            vv = u
        out_path.reverse()
        return True, out_path, int(trial + 1)
    finally:
        free(f)
        free(colors)
        free(cands)
        graph_free(&g)
