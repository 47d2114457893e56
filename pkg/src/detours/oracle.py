"""Exact brute-force oracles.

Two engines with very different scaling: subset dynamic programming (memory
2^n, exact, used up to ``dp_vertex_cap`` vertices) and branch-and-bound
search (exact when it exhausts, falls back to "inconclusive" when its node
budget runs out).  The solvers in this package are always checked against
these oracles, never the other way around.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import (
    Graph,
    UndirectedGraph,
    UnreachablePair,
    distances_from,
    out_neighbors,
)


class _Inconclusive:
    """Marker for a search that ran out of budget before deciding."""

    def __repr__(self) -> str:
        return "INCONCLUSIVE"

    def __bool__(self) -> bool:
        return False


INCONCLUSIVE = _Inconclusive()

_DP_CAP_HARD_MAX = 25


@dataclass(frozen=True)
class OracleLimits:
    """Resource knobs for the oracles.

    dp_vertex_cap: largest vertex count handled by the 2^n subset DP
    (hard-capped at 25, where the table alone is 2^25 entries).
    bnb_node_budget: node expansions granted to branch-and-bound before it
    gives up and reports a non-exact answer.
    """

    dp_vertex_cap: int = 20
    bnb_node_budget: int = 100_000_000

    def __post_init__(self) -> None:
        if not 1 <= self.dp_vertex_cap <= _DP_CAP_HARD_MAX:
            raise ValueError(
                f"dp_vertex_cap must be in 1..{_DP_CAP_HARD_MAX}, "
                f"got {self.dp_vertex_cap}"
            )
        if self.bnb_node_budget < 1:
            raise ValueError("bnb_node_budget must be positive")


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class OracleAnswer:
    """value None means "no such path"; exact=False means the engine ran out
    of budget and ``value`` is only the best bound it reached."""

    value: int | None
    witness: tuple[int, ...] | None
    exact: bool


@dataclass(frozen=True)
class DetourOracleAnswer:
    dist: int
    k_star: int | None
    witness: tuple[int, ...] | None
    exact: bool


def longest_path_oracle(
    g: Graph, limits: OracleLimits = DEFAULT_LIMITS
) -> OracleAnswer:
    adj = out_neighbors(g)
    if g.n <= limits.dp_vertex_cap:
        length, path = kernels.longest_path(adj)
        return OracleAnswer(length, tuple(path), True)
    found, length, path, completed, _ = kernels.bnb_path(
        adj, -1, -1, kernels.MODE_MAX, 0, limits.bnb_node_budget
    )
    witness = tuple(path) if path is not None else None
    return OracleAnswer(length if found else None, witness, completed)


def longest_st_path_oracle(
    g: Graph, s: int, t: int, limits: OracleLimits = DEFAULT_LIMITS
) -> OracleAnswer:
    adj = out_neighbors(g)
    if g.n <= limits.dp_vertex_cap:
        length, path = kernels.longest_path_from_to(adj, s, t)
        if length < 0:
            return OracleAnswer(None, None, True)
        return OracleAnswer(length, tuple(path), True)
    found, length, path, completed, _ = kernels.bnb_path(
        adj, s, t, kernels.MODE_MAX, 0, limits.bnb_node_budget
    )
    if not found:
        # Without exhausting the search no-path cannot be certified.
        return OracleAnswer(None, None, completed)
    return OracleAnswer(length, tuple(path), completed)


def detour_oracle(
    g: Graph, s: int, t: int, limits: OracleLimits = DEFAULT_LIMITS
) -> DetourOracleAnswer:
    """Largest k such that some simple (s, t)-path has length dist(s,t) + k.

    Raises UnreachablePair when t cannot be reached at all, which is a
    different situation from k* = 0 (reachable, but only shortest paths).
    """
    dist = distances_from(g, s)[t]
    if dist < 0:
        raise UnreachablePair(f"vertex {t} is unreachable from {s}")
    ans = longest_st_path_oracle(g, s, t, limits)
    if ans.value is None:
        # Reachable implies at least the shortest path exists; only a budget
        # blowout can land here.
        return DetourOracleAnswer(dist, None, None, False)
    return DetourOracleAnswer(dist, ans.value - dist, ans.witness, ans.exact)


def hamiltonian_path_from(
    g: UndirectedGraph, w: int, limits: OracleLimits = DEFAULT_LIMITS
):
    """A Hamiltonian path starting at w, None if there is none, or
    INCONCLUSIVE when the budget ran out before the search finished."""
    adj = g.adj
    n = g.n
    if n == 1:
        return (w,)
    if n <= limits.dp_vertex_cap:
        path = kernels.exact_path(adj, w, n - 1, -1)
        return tuple(path) if path is not None else None
    found, _, path, completed, _ = kernels.bnb_path(
        adj, w, -1, kernels.MODE_EXACT, n - 1, limits.bnb_node_budget
    )
    if found:
        return tuple(path)
    return None if completed else INCONCLUSIVE
