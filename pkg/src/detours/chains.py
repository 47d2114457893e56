"""Ordered 3-leg disjoint path queries.

Given four distinct terminals, find paths s->w, w->v, v->t that concatenate
into one simple (s, t)-path.  The "exhaustive" backend runs a milestone DFS
with staged reachability pruning; the "flow-prefilter" backend first solves
a unit-capacity flow relaxation (three supply units at {s, w, v}, three
demand units at {w, v, t}, internal capacity 1 on every non-terminal) and
only falls through to the exhaustive search when the relaxation is feasible.
Flow value below 3 certifies that no solution exists, so the prefilter never
changes answers, only cost.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import DirectedGraph, Graph, _bfs_augment, is_simple_path, out_neighbors
from .oracle import DEFAULT_LIMITS


@dataclass(frozen=True)
class ChainQuery:
    s: int
    w: int
    v: int
    t: int

    def __post_init__(self) -> None:
        terms = (self.s, self.w, self.v, self.t)
        if len(set(terms)) != 4:
            raise ValueError(f"chain terminals must be distinct, got {terms}")


@dataclass(frozen=True)
class ChainSolution:
    leg_sw: tuple[int, ...]
    leg_wv: tuple[int, ...]
    leg_vt: tuple[int, ...]

    @property
    def total_length(self) -> int:
        return (
            len(self.leg_sw) + len(self.leg_wv) + len(self.leg_vt) - 3
        )

    def concatenated(self) -> tuple[int, ...]:
        return self.leg_sw + self.leg_wv[1:] + self.leg_vt[1:]

    def validate(self, g: Graph, q: ChainQuery) -> bool:
        if (
            self.leg_sw[0] != q.s
            or self.leg_sw[-1] != q.w
            or self.leg_wv[0] != q.w
            or self.leg_wv[-1] != q.v
            or self.leg_vt[0] != q.v
            or self.leg_vt[-1] != q.t
        ):
            return False
        return is_simple_path(g, self.concatenated())


@dataclass(frozen=True)
class ChainAnswer:
    """solution None with complete=True is a certified "no solution";
    complete=False means the node budget ran out first."""

    solution: ChainSolution | None
    complete: bool
    nodes: int
    backend: str


def _split_solution(path: list[int], q: ChainQuery) -> ChainSolution:
    iw = path.index(q.w)
    iv = path.index(q.v)
    return ChainSolution(
        tuple(path[: iw + 1]),
        tuple(path[iw : iv + 1]),
        tuple(path[iv:]),
    )


def _solve_exhaustive(g: Graph, q: ChainQuery, budget: int) -> ChainAnswer:
    adj = out_neighbors(g)
    found, path, complete, nodes = kernels.chain_path(
        adj, q.s, q.w, q.v, q.t, budget
    )
    if found:
        return ChainAnswer(_split_solution(path, q), True, nodes, "exhaustive")
    return ChainAnswer(None, complete, nodes, "exhaustive")


def _relaxation_feasible(g: Graph, q: ChainQuery) -> bool:
    """Unit-capacity flow relaxation; value 3 is necessary for a solution."""
    n = g.n
    terminals = {q.s, q.w, q.v, q.t}
    src, snk = 2 * n, 2 * n + 1
    res: list[dict[int, int]] = [dict() for _ in range(2 * n + 2)]
    for x in range(n):
        if x not in terminals:
            res[2 * x][2 * x + 1] = 1
    arcs = (
        g.arcs
        if isinstance(g, DirectedGraph)
        else {(a, b) for a, b in g.edges} | {(b, a) for a, b in g.edges}
    )
    for u, x in arcs:
        res[2 * u + 1][2 * x] = res[2 * u + 1].get(2 * x, 0) + 1
    for tail in (q.s, q.w, q.v):
        res[src][2 * tail + 1] = 1
    for head in (q.w, q.v, q.t):
        res[2 * head][snk] = 1
    value = 0
    while value < 3 and _bfs_augment(res, src, snk):
        value += 1
    return value == 3


def _solve_flow_prefilter(g: Graph, q: ChainQuery, budget: int) -> ChainAnswer:
    if not _relaxation_feasible(g, q):
        return ChainAnswer(None, True, 0, "flow-prefilter")
    inner = _solve_exhaustive(g, q, budget)
    return ChainAnswer(inner.solution, inner.complete, inner.nodes, "flow-prefilter")


CHAIN_BACKENDS = {
    "exhaustive": _solve_exhaustive,
    "flow-prefilter": _solve_flow_prefilter,
}


def chain_backend_names() -> tuple[str, ...]:
    return tuple(sorted(CHAIN_BACKENDS))


def solve_chain3(
    g: Graph,
    q: ChainQuery,
    backend: str = "exhaustive",
    budget: int = DEFAULT_LIMITS.bnb_node_budget,
) -> ChainAnswer:
    try:
        fn = CHAIN_BACKENDS[backend]
    except KeyError:
        raise ValueError(
            f"unknown chain backend {backend!r}; choose from {chain_backend_names()}"
        ) from None
    for term in (q.s, q.w, q.v, q.t):
        if not 0 <= term < g.n:
            raise ValueError(f"terminal {term} out of range for n={g.n}")
    ans = fn(g, q, budget)
    if ans.solution is not None:
        assert ans.solution.validate(g, q)
    return ans


def path_through(
    g: Graph,
    s: int,
    w: int,
    t: int,
    budget: int = DEFAULT_LIMITS.bnb_node_budget,
) -> tuple[tuple[int, ...] | None, bool, int]:
    """Simple (s, t)-path that visits w: the two-milestone degenerate form
    of the chain query (last leg collapsed).  Returns (path, complete, nodes).
    """
    adj = out_neighbors(g)
    found, path, complete, nodes = kernels.chain_path(adj, s, w, t, t, budget)
    if found:
        return tuple(path), True, nodes
    return None, complete, nodes
