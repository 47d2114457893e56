"""Graph containers and the structural operations the solvers lean on.

Vertices are 0-indexed ints.  Directed graphs store arcs, undirected graphs
store edges as (min, max) pairs; neither allows loops or duplicates.
Adjacency lists are kept sorted ascending so every traversal in the package
is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Malformed graph input or an operation's precondition not met."""


class UnreachablePair(GraphError):
    """Raised when a query needs t reachable from s and it is not."""


class DirectedGraph:
    kind = "directed"
    __slots__ = ("n", "arcs", "out_adj", "in_adj")

    def __init__(self, n: int, arcs) -> None:
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"arc ({u}, {v}) is a loop")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            out_adj[u].append(v)
            in_adj[v].append(u)
        for row in out_adj:
            row.sort()
        for row in in_adj:
            row.sort()
        self.n = n
        self.arcs = frozenset(seen)
        self.out_adj = out_adj
        self.in_adj = in_adj

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirectedGraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    kind = "undirected"
    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges) -> None:
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"edge ({a}, {b}) is a loop")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            adj[a].append(b)
            adj[b].append(a)
        for row in adj:
            row.sort()
        self.n = n
        self.edges = frozenset(seen)
        self.adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


Graph = DirectedGraph | UndirectedGraph


def build_digraph(n: int, arcs) -> DirectedGraph:
    return DirectedGraph(n, arcs)


def build_undirected(n: int, edges) -> UndirectedGraph:
    return UndirectedGraph(n, edges)


def out_neighbors(g: Graph) -> list[list[int]]:
    """Forward adjacency for either graph kind (symmetric when undirected)."""
    return g.out_adj if isinstance(g, DirectedGraph) else g.adj


def transpose(g: DirectedGraph) -> DirectedGraph:
    return DirectedGraph(g.n, [(v, u) for (u, v) in g.arcs])


def symmetrize(g: DirectedGraph) -> UndirectedGraph:
    edges = {(min(u, v), max(u, v)) for (u, v) in g.arcs}
    return UndirectedGraph(g.n, sorted(edges))


def to_digraph(g: UndirectedGraph) -> DirectedGraph:
    arcs = []
    for a, b in sorted(g.edges):
        arcs.append((a, b))
        arcs.append((b, a))
    return DirectedGraph(g.n, arcs)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``, relabeled 0..k-1 ascending.

    Returns (subgraph, to_orig) where to_orig[i] is the original id of
    sub-vertex i.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    index = {v: i for i, v in enumerate(keep)}
    if isinstance(g, DirectedGraph):
        arcs = [
            (index[u], index[v])
            for (u, v) in g.arcs
            if u in index and v in index
        ]
        return DirectedGraph(len(keep), arcs), tuple(keep)
    edges = [
        (index[a], index[b]) for (a, b) in g.edges if a in index and b in index
    ]
    return UndirectedGraph(len(keep), edges), tuple(keep)


@dataclass(frozen=True)
class BfsLayering:
    """Distance layers from a source; level -1 marks unreachable vertices."""

    source: int
    level: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]
    ell_max: int


def distances_from(g: Graph, source: int) -> list[int]:
    adj = out_neighbors(g)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_layering(g: Graph, source: int) -> BfsLayering:
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range for n={g.n}")
    dist = distances_from(g, source)
    ell_max = max(dist)
    layers: list[list[int]] = [[] for _ in range(ell_max + 1)]
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].append(v)
    return BfsLayering(
        source=source,
        level=tuple(dist),
        layers=tuple(tuple(layer) for layer in layers),
        ell_max=ell_max,
    )


def shortest_path(g: Graph, s: int, t: int) -> list[int] | None:
    """A shortest (s, t)-path as a vertex list, or None if unreachable."""
    adj = out_neighbors(g)
    parent = [-2] * g.n
    parent[s] = -1
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for v in adj[u]:
            if parent[v] == -2:
                parent[v] = u
                queue.append(v)
    if parent[t] == -2:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def reachable_set(g: Graph, s: int) -> set[int]:
    return {v for v, d in enumerate(distances_from(g, s)) if d >= 0}


def co_reachable_set(g: Graph, t: int) -> set[int]:
    """Vertices from which t can be reached."""
    if isinstance(g, UndirectedGraph):
        return reachable_set(g, t)
    adj = g.in_adj
    seen = [False] * g.n
    seen[t] = True
    queue = deque([t])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return {v for v, hit in enumerate(seen) if hit}


def is_connected(g: UndirectedGraph) -> bool:
    return len(reachable_set(g, 0)) == g.n


def is_strongly_connected(g: DirectedGraph) -> bool:
    if len(reachable_set(g, 0)) != g.n:
        return False
    return len(co_reachable_set(g, 0)) == g.n


def is_2_strongly_connected(g: DirectedGraph) -> bool:
    """Strongly connected and still strongly connected after deleting any
    single vertex.  Graphs with fewer than 2 vertices do not qualify."""
    if g.n < 2 or not is_strongly_connected(g):
        return False
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub, _ = induced_subgraph(g, rest)
        if not is_strongly_connected(sub):
            return False
    return True


def is_2_connected_undirected(g: UndirectedGraph) -> bool:
    """Connected with no articulation vertex (single-vertex deletions keep
    it connected)."""
    if g.n < 2 or not is_connected(g):
        return False
    if g.n == 2:
        return True
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub, _ = induced_subgraph(g, rest)
        if not is_connected(sub):
            return False
    return True


def diameter_and_pair(g: Graph) -> tuple[int, int, int]:
    """(diameter, s, t) with dist(s, t) = diameter and (s, t) the
    lexicographically smallest such pair.  Needs the graph strongly
    connected (directed) or connected (undirected)."""
    if isinstance(g, DirectedGraph):
        if not is_strongly_connected(g):
            raise GraphError("not strongly connected")
    else:
        if not is_connected(g):
            raise GraphError("not connected")
    best = (-1, -1, -1)
    for s in range(g.n):
        dist = distances_from(g, s)
        for t, d in enumerate(dist):
            if d > best[0]:
                best = (d, s, t)
    return best


def is_simple_path(g: Graph, vertices) -> bool:
    """True when ``vertices`` is a nonempty simple path in g."""
    seq = list(vertices)
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    if isinstance(g, DirectedGraph):
        return all(g.has_arc(a, b) for a, b in zip(seq, seq[1:]))
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class PathWitness:
    """A concrete path certifying a solver's "yes", with the baseline
    (shortest distance or diameter) it beats and the stage that found it."""

    vertices: tuple[int, ...]
    baseline: int
    stage: str

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def validate(self, g: Graph) -> bool:
        return is_simple_path(g, self.vertices)


# ---------------------------------------------------------------------------
# Two internally vertex-disjoint (s, t)-paths via unit-capacity flow on the
# split graph: every vertex other than s and t becomes an in-half and an
# out-half joined by a capacity-1 arc, so one unit of flow occupies the whole
# vertex.  Two augmenting rounds suffice.


def _bfs_augment(res: list[dict[int, int]], source: int, sink: int) -> bool:
    parent: dict[int, int] = {source: -1}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        if a == sink:
            break
        for b in sorted(res[a]):
            if res[a][b] > 0 and b not in parent:
                parent[b] = a
                queue.append(b)
    if sink not in parent:
        return False
    b = sink
    while b != source:
        a = parent[b]
        res[a][b] -= 1
        res[b][a] = res[b].get(a, 0) + 1
        b = a
    return True


def max_flow_unit_vertex(
    g: DirectedGraph, s: int, t: int, need: int
) -> tuple[int, list[list[int]]]:
    """Push up to ``need`` units of internally vertex-disjoint (s, t)-flow.

    Returns (value, paths) with the flow decomposed into vertex lists.
    """
    if s == t:
        raise GraphError("flow endpoints must differ")
    n = g.n
    res: list[dict[int, int]] = [dict() for _ in range(2 * n)]

    def v_in(v: int) -> int:
        return 2 * v

    def v_out(v: int) -> int:
        return 2 * v + 1

    for v in range(n):
        if v != s and v != t:
            res[v_in(v)][v_out(v)] = 1
    for u, v in g.arcs:
        res[v_out(u)][v_in(v)] = res[v_out(u)].get(v_in(v), 0) + 1
    source, sink = v_out(s), v_in(t)
    value = 0
    while value < need and _bfs_augment(res, source, sink):
        value += 1
    # Arc (u, v) carries flow when its residual dropped to zero.
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(g.arcs):
        if res[v_out(u)].get(v_in(v), 1) == 0:
            succ[u].append(v)
    paths: list[list[int]] = []
    for first in list(succ[s]):
        path = [s, first]
        succ[s].remove(first)
        while path[-1] != t:
            nxt = succ[path[-1]].pop(0)
            path.append(nxt)
        paths.append(path)
    return value, paths


def two_internally_disjoint_paths(
    g: Graph, s: int, t: int
) -> tuple[list[int], list[int]] | None:
    """Two (s, t)-paths sharing only s and t, or None if they don't exist."""
    dg = g if isinstance(g, DirectedGraph) else to_digraph(g)
    value, paths = max_flow_unit_vertex(dg, s, t, 2)
    if value < 2:
        return None
    return paths[0], paths[1]
