"""Pure-Python search kernels.

Reference implementation of the hot inner loops: subset dynamic programming
over vertex sets, branch-and-bound path search, milestone-constrained path
search, and color-coded long-path trials.  The compiled twin in
``_speedups.pyx`` mirrors every routine here bit for bit: same traversal
order, same node accounting, same tie-breaking, same results.

Graphs arrive as adjacency lists (``adj[v]`` = ascending list of successors).
Vertex sets are Python integers used as bitsets, which keeps the module free
of third-party dependencies and works for any vertex count.
"""

from __future__ import annotations

BACKEND_NAME = "pure"

MASK64 = (1 << 64) - 1
_XS_MULT = 0x2545F4914F6CDD1D
# Substituted for a zero seed so the generator never gets stuck on the
# all-zero state.
_XS_SEED_FILL = 0x9E3779B97F4A7C15

MODE_MAX = 0
MODE_ATLEAST = 1
MODE_EXACT = 2


def xorshift_step(state: int) -> tuple[int, int]:
    """Advance the xorshift64* generator once; return (new_state, output)."""
    x = state & MASK64
    x ^= x >> 12
    x ^= (x << 25) & MASK64
    x ^= x >> 27
    return x, (x * _XS_MULT) & MASK64


def xorshift_stream(seed: int, count: int) -> list[int]:
    """First ``count`` outputs for ``seed``; used to pin backend parity."""
    state = seed & MASK64
    if state == 0:
        state = _XS_SEED_FILL
    out = []
    for _ in range(count):
        state, value = xorshift_step(state)
        out.append(value)
    return out


def _adj_bits(adj: list[list[int]]) -> list[int]:
    return [sum(1 << w for w in row) for row in adj]


def _in_bits(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    inb = [0] * n
    for u, row in enumerate(adj):
        for v in row:
            inb[v] |= 1 << u
    return inb


def _reach(adjb: list[int], v: int, blocked: int) -> int:
    """Bitset of vertices reachable from v without touching ``blocked``."""
    seen = (1 << v) | blocked
    frontier = 1 << v
    acc = 1 << v
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            nxt |= adjb[u]
        nxt &= ~seen
        seen |= nxt
        acc |= nxt
        frontier = nxt
    return acc


# ---------------------------------------------------------------------------
# Subset DP: dp[mask] = bitset of endpoints v such that some simple path
# covering exactly ``mask`` ends at v.  A path covering mask has
# popcount(mask) - 1 arcs, so exact-length queries read straight off the
# table.


def _dp_fill(adj: list[list[int]], start: int) -> list[int]:
    n = len(adj)
    size = 1 << n
    dp = [0] * size
    if start < 0:
        for v in range(n):
            dp[1 << v] = 1 << v
    else:
        dp[1 << start] = 1 << start
    adjb = _adj_bits(adj)
    for mask in range(size):
        ends = dp[mask]
        if not ends:
            continue
        m = ends
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            ext = adjb[v] & ~mask
            while ext:
                lw = ext & -ext
                dp[mask | lw] |= lw
                ext ^= lw
    return dp


def _walk_back(inb: list[int], dp: list[int], mask: int, v: int) -> list[int]:
    path = [v]
    while mask != (1 << v):
        prev_mask = mask & ~(1 << v)
        cands = dp[prev_mask] & inb[v]
        low = cands & -cands
        u = low.bit_length() - 1
        path.append(u)
        mask = prev_mask
        v = u
    path.reverse()
    return path


def longest_path(adj: list[list[int]]) -> tuple[int, list[int] | None]:
    """Longest simple path anywhere in the graph: (arc count, vertex list)."""
    n = len(adj)
    if n == 0:
        return -1, None
    dp = _dp_fill(adj, -1)
    best_mask = -1
    best_pop = 0
    for mask in range(1 << n):
        if dp[mask]:
            pop = mask.bit_count()
            if pop > best_pop:
                best_pop = pop
                best_mask = mask
    ends = dp[best_mask]
    v = (ends & -ends).bit_length() - 1
    path = _walk_back(_in_bits(adj), dp, best_mask, v)
    return best_pop - 1, path


def longest_path_from_to(
    adj: list[list[int]], s: int, t: int
) -> tuple[int, list[int] | None]:
    """Longest simple (s, t)-path; (-1, None) if t is not simple-path
    reachable from s."""
    n = len(adj)
    dp = _dp_fill(adj, s)
    tb = 1 << t
    best_mask = -1
    best_pop = 0
    for mask in range(1 << n):
        if dp[mask] & tb:
            pop = mask.bit_count()
            if pop > best_pop:
                best_pop = pop
                best_mask = mask
    if best_mask < 0:
        return -1, None
    path = _walk_back(_in_bits(adj), dp, best_mask, t)
    return best_pop - 1, path


def exact_path(
    adj: list[list[int]], s: int, arcs: int, t: int
) -> list[int] | None:
    """A simple path from s with exactly ``arcs`` arcs, ending at t
    (or anywhere when t < 0).  None if no such path exists."""
    n = len(adj)
    if arcs < 0 or arcs > n - 1:
        return None
    dp = _dp_fill(adj, s)
    want = arcs + 1
    tb = 1 << t if t >= 0 else 0
    for mask in range(1 << n):
        ends = dp[mask]
        if not ends or mask.bit_count() != want:
            continue
        if t >= 0:
            if not ends & tb:
                continue
            v = t
        else:
            v = (ends & -ends).bit_length() - 1
        return _walk_back(_in_bits(adj), dp, mask, v)
    return None


def feasible_lengths(adj: list[list[int]], s: int, t: int) -> int:
    """Bitmask over arc counts L such that a simple (s, t)-path with exactly
    L arcs exists."""
    dp = _dp_fill(adj, s)
    tb = 1 << t
    out = 0
    for mask in range(1 << len(adj)):
        if dp[mask] & tb:
            out |= 1 << (mask.bit_count() - 1)
    return out


# ---------------------------------------------------------------------------
# Branch and bound.  One routine, three modes:
#   MODE_MAX      maximize path length (bound ignored)
#   MODE_ATLEAST  stop at the first path of length >= bound
#   MODE_EXACT    stop at the first path of length == bound
# s or t may be -1 meaning "any".  The optimistic bound at a node is the
# current length plus every vertex still reachable through unvisited ones;
# subtrees that cannot beat it are cut.  ``budget`` caps the number of node
# expansions; blowing it makes the answer non-definitive (completed=False).


def bnb_path(
    adj: list[list[int]],
    s: int,
    t: int,
    mode: int,
    bound: int,
    budget: int,
) -> tuple[bool, int, list[int] | None, bool, int]:
    n = len(adj)
    adjb = _adj_bits(adj)
    best_len = -1
    best_path: list[int] | None = None
    found = False
    aborted = False
    nodes = 0
    path: list[int] = []

    def dfs(v: int, visited: int, length: int) -> bool:
        nonlocal best_len, best_path, found, aborted, nodes
        nodes += 1
        if nodes > budget:
            aborted = True
            return True
        path.append(v)
        stop = False
        at_goal = t < 0 or v == t
        if mode == MODE_MAX:
            if at_goal and length > best_len:
                best_len = length
                best_path = path.copy()
        elif mode == MODE_ATLEAST:
            if at_goal and length >= bound:
                best_len = length
                best_path = path.copy()
                found = True
                stop = True
        else:
            if at_goal and length == bound:
                best_len = length
                best_path = path.copy()
                found = True
                stop = True
        if not stop:
            ok = not (mode == MODE_EXACT and length >= bound)
            if ok:
                reach = _reach(adjb, v, visited & ~(1 << v))
                if t >= 0 and not (reach >> t) & 1:
                    ok = False
                else:
                    ub = length + reach.bit_count() - 1
                    if mode == MODE_MAX:
                        ok = ub > best_len
                    else:
                        ok = ub >= bound
            if ok:
                for w in adj[v]:
                    if (visited >> w) & 1:
                        continue
                    if dfs(w, visited | (1 << w), length + 1):
                        stop = True
                        break
        path.pop()
        return stop

    starts = [s] if s >= 0 else list(range(n))
    for v0 in starts:
        if dfs(v0, 1 << v0, 0):
            break
    if mode == MODE_MAX:
        found = best_len >= 0
    return found, best_len, best_path, not aborted, nodes


# ---------------------------------------------------------------------------
# Milestone path search: a simple path s -> ... -> w -> ... -> v -> ... -> t
# (v == t collapses the last leg).  Before w is reached, v and t are off
# limits; between w and v, t is off limits.  Pruned by staged reachability:
# from the current vertex each remaining milestone must be reachable in
# sequence through unvisited vertices.


def chain_path(
    adj: list[list[int]],
    s: int,
    w: int,
    v: int,
    t: int,
    budget: int,
) -> tuple[bool, list[int] | None, bool, int]:
    adjb = _adj_bits(adj)
    ms = (w, v, t)
    found = False
    result: list[int] | None = None
    aborted = False
    nodes = 0
    path: list[int] = []
    forb0 = (1 << v) | (1 << t)
    forb1 = (1 << t) if v != t else 0

    def dfs(x: int, visited: int, ph: int) -> bool:
        nonlocal found, result, aborted, nodes
        nodes += 1
        if nodes > budget:
            aborted = True
            return True
        while ph < 3 and x == ms[ph]:
            ph += 1
        path.append(x)
        stop = False
        if ph == 3:
            found = True
            result = path.copy()
            stop = True
        else:
            ok = True
            start = x
            blocked = visited & ~(1 << x)
            for j in range(ph, 3):
                reach = _reach(adjb, start, blocked)
                if not (reach >> ms[j]) & 1:
                    ok = False
                    break
                start = ms[j]
                blocked = visited
            if ok:
                fb = forb0 if ph == 0 else (forb1 if ph == 1 else 0)
                for y in adj[x]:
                    if (visited >> y) & 1 or (fb >> y) & 1:
                        continue
                    if dfs(y, visited | (1 << y), ph):
                        stop = True
                        break
        path.pop()
        return stop

    dfs(s, 1 << s, 0)
    return found, result, not aborted, nodes


# ---------------------------------------------------------------------------
# Color coding.  A simple path with ``min_arcs`` arcs has min_arcs + 1
# vertices; color every vertex uniformly with that many colors and look for a
# path whose vertices use each color exactly once.  Each trial succeeds with
# probability >= (k+1)!/(k+1)^(k+1) when a long path exists, so the caller
# sizes ``trials`` to push the miss probability below its target.  Colors for
# all trials are drawn from one xorshift64* stream seeded once.


def color_coding(
    adj: list[list[int]],
    min_arcs: int,
    trials: int,
    seed: int,
) -> tuple[bool, list[int] | None, int]:
    n = len(adj)
    if n == 0:
        return False, None, 0
    if min_arcs <= 0:
        return True, [0], 0
    k1 = min_arcs + 1
    if k1 > n:
        return False, None, 0
    state = seed & MASK64
    if state == 0:
        state = _XS_SEED_FILL
    inb = _in_bits(adj)
    size = 1 << k1
    full = size - 1
    for trial in range(trials):
        colors = []
        for _ in range(n):
            state, out = xorshift_step(state)
            colors.append(out % k1)
        f = [0] * size
        for vtx in range(n):
            f[1 << colors[vtx]] |= 1 << vtx
        for cs in range(size):
            bag = f[cs]
            if not bag:
                continue
            m = bag
            while m:
                low = m & -m
                x = low.bit_length() - 1
                m ^= low
                for y in adj[x]:
                    cb = 1 << colors[y]
                    if not cs & cb:
                        f[cs | cb] |= 1 << y
        if f[full]:
            ends = f[full]
            v = (ends & -ends).bit_length() - 1
            cs = full
            out_path = [v]
            while cs.bit_count() > 1:
                prev = cs & ~(1 << colors[v])
                cands = f[prev] & inb[v]
                low = cands & -cands
                u = low.bit_length() - 1
                out_path.append(u)
                cs = prev
                v = u
            out_path.reverse()
            return True, out_path, trial + 1
    return False, None, trials
