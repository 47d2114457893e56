"""Shared helpers for the test suite.

Everything in here is deliberately independent of the package internals:
random instance generators use only the public graph constructors, and the
brute-force oracles walk raw adjacency lists built straight from the arc and
edge sets. When a test compares a solver against ``brute_longest_path`` it is
comparing two genuinely separate implementations.
"""

from __future__ import annotations

from random import Random

import networkx as nx

from detours import (
    DirectedGraph,
    UndirectedGraph,
    build_digraph,
    build_undirected,
    is_2_connected_undirected,
    is_2_strongly_connected,
)


# ---------------------------------------------------------------------------
# Random instance generators
# ---------------------------------------------------------------------------


def rand_digraph(rng: Random, n: int, density: float) -> DirectedGraph:
    arcs = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if a != b and rng.random() < density
    ]
    return build_digraph(n, arcs)


def rand_undirected(rng: Random, n: int, density: float) -> UndirectedGraph:
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < density
    ]
    return build_undirected(n, edges)


def rand_connected_undirected(rng: Random, n: int, density: float) -> UndirectedGraph:
    """Random spanning tree plus extra edges, so connectivity is guaranteed."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a = order[rng.randrange(i)]
        b = order[i]
        edges.add((min(a, b), max(a, b)))
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                edges.add((a, b))
    return build_undirected(n, sorted(edges))


def rand_2connected_undirected(rng: Random, n: int) -> UndirectedGraph:
    """Cycle through all vertices plus random chords, retried until 2-connected."""
    assert n >= 3
    while True:
        order = list(range(n))
        rng.shuffle(order)
        edges = {(min(a, b), max(a, b)) for a, b in zip(order, order[1:] + order[:1])}
        for _ in range(rng.randrange(1, n)):
            a, b = rng.randrange(n), rng.randrange(n)
            if a != b:
                edges.add((min(a, b), max(a, b)))
        g = build_undirected(n, sorted(edges))
        if is_2_connected_undirected(g):
            return g


def rand_2sc_digraph(rng: Random, n: int, extra: int | None = None) -> DirectedGraph:
    """Random 2-strongly-connected digraph, without rejection sampling.

    The base is a squared cycle on a shuffled vertex order: arcs one and two
    steps forward. Deleting any vertex leaves the skip arc bridging the gap,
    so the base is 2-strongly-connected by construction; random extra arcs
    only add connectivity. The property is still asserted once per instance.
    """
    assert n >= 3
    if extra is None:
        extra = rng.randrange(2 * n)
    order = list(range(n))
    rng.shuffle(order)
    arcs = set()
    for i in range(n):
        arcs.add((order[i], order[(i + 1) % n]))
        arcs.add((order[i], order[(i + 2) % n]))
    for _ in range(extra):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            arcs.add((a, b))
    g = build_digraph(n, sorted(arcs))
    assert is_2_strongly_connected(g)
    return g


def rand_strongly_connected(rng: Random, n: int, extra: int) -> DirectedGraph:
    """Directed cycle plus random arcs; strongly connected by construction."""
    arcs = {(i, (i + 1) % n) for i in range(n)}
    for _ in range(extra):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            arcs.add((a, b))
    return build_digraph(n, sorted(arcs))


# ---------------------------------------------------------------------------
# Conversions to networkx for structural cross-checks
# ---------------------------------------------------------------------------


def to_nx(g: DirectedGraph | UndirectedGraph):
    if isinstance(g, DirectedGraph):
        h = nx.DiGraph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.arcs)
    else:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
    return h


# ---------------------------------------------------------------------------
# Brute-force oracles (plain recursive DFS over raw arc sets)
# ---------------------------------------------------------------------------


def _raw_adj(g: DirectedGraph | UndirectedGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    if isinstance(g, DirectedGraph):
        for a, b in sorted(g.arcs):
            adj[a].append(b)
    else:
        for a, b in sorted(g.edges):
            adj[a].append(b)
            adj[b].append(a)
    return adj


def brute_longest_path(g: DirectedGraph | UndirectedGraph) -> int:
    """Length of a longest simple path, by exhaustive DFS. For tiny graphs only."""
    adj = _raw_adj(g)
    best = 0

    def walk(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                walk(w, seen, length + 1)
                seen.remove(w)

    for start in range(g.n):
        walk(start, {start}, 0)
    return best


def brute_longest_st(g: DirectedGraph | UndirectedGraph, s: int, t: int) -> int:
    """Length of a longest simple s-t path, or -1 when t is unreachable."""
    adj = _raw_adj(g)
    best = -1

    def walk(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        if v == t:
            if length > best:
                best = length
            return
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                walk(w, seen, length + 1)
                seen.remove(w)

    walk(s, {s}, 0)
    return best


def brute_has_st_path_visiting(
    g: DirectedGraph | UndirectedGraph, s: int, t: int, first: int, second: int
) -> bool:
    """True when some simple s-t path visits ``first`` and then ``second``.

    This is exactly the feasibility question behind a three-leg chain: legs
    that share only their milestone endpoints concatenate into a simple path
    from s to t that passes the milestones in order.
    """
    adj = _raw_adj(g)
    found = False

    def walk(v: int, seen: set[int], hit_first: bool, hit_second: bool) -> None:
        nonlocal found
        if found:
            return
        now_first = hit_first or v == first
        now_second = hit_second or (now_first and v == second)
        if v == t:
            if now_first and now_second:
                found = True
            return
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                walk(w, seen, now_first, now_second)
                seen.remove(w)

    walk(s, {s}, s == first, s == first and first == second)
    return found


def brute_has_ham_path(g: UndirectedGraph) -> bool:
    """Hamiltonian path check by DFS from every start vertex."""
    adj = _raw_adj(g)
    n = g.n
    if n == 1:
        return True

    def walk(v: int, seen: set[int]) -> bool:
        if len(seen) == n:
            return True
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                if walk(w, seen):
                    return True
                seen.remove(w)
        return False

    return any(walk(start, {start}) for start in range(n))


def path_length_ok(
    g: DirectedGraph | UndirectedGraph, vertices, s: int, t: int, need: int
) -> bool:
    """Validate a claimed witness: simple path from s to t of length >= need."""
    seq = list(vertices)
    if len(seq) - 1 < need or seq[0] != s or seq[-1] != t:
        return False
    if len(set(seq)) != len(seq):
        return False
    if isinstance(g, DirectedGraph):
        return all((a, b) in g.arcs for a, b in zip(seq, seq[1:]))
    return all(
        (min(a, b), max(a, b)) in g.edges for a, b in zip(seq, seq[1:])
    )
