"""Configurable path-search subroutines shared by the solvers.

Three engines: subset DP and branch-and-bound are exact; color coding is
randomized one-sided (a found path is always real, "not found" is wrong with
probability at most delta when the trial count is sized for it).  Strategy
"auto" picks an exact engine by instance size.  Color coding never runs
unless explicitly requested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .graphs import Graph, distances_from, out_neighbors, shortest_path
from .oracle import DEFAULT_LIMITS, OracleLimits

STRATEGIES = ("auto", "subset-dp", "bnb", "color-coding")


@dataclass(frozen=True)
class SubroutineConfig:
    strategy: str = "auto"
    seed: int = 0  # 64-bit, only consulted by randomized strategies
    delta: float = 1e-3
    limits: OracleLimits = field(default_factory=OracleLimits)

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(
                f"strategy must be one of {STRATEGIES}, got {self.strategy!r}"
            )
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must be in (0, 1), got {self.delta}")


DEFAULT_CONFIG = SubroutineConfig()


@dataclass(frozen=True)
class SearchResult:
    """found=False splits on ``complete``: True means a certified absence,
    False means the engine gave up (budget) or is randomized (carries its
    failure bound in ``delta``)."""

    found: bool
    witness: tuple[int, ...] | None
    complete: bool
    method: str
    trials: int | None = None
    delta: float | None = None
    nodes: int | None = None


def trial_count(min_arcs: int, delta: float) -> int:
    """Trials needed to push the per-query miss probability below delta:
    each trial hits an existing path of min_arcs arcs with probability at
    least e^-(min_arcs+1)."""
    return math.ceil(math.exp(min_arcs + 1) * math.log(1.0 / delta))


def _pick_exact(g: Graph, cfg: SubroutineConfig) -> str:
    if cfg.strategy == "auto":
        return "subset-dp" if g.n <= cfg.limits.dp_vertex_cap else "bnb"
    return cfg.strategy


def has_path_at_least(
    g: Graph, k: int, cfg: SubroutineConfig = DEFAULT_CONFIG
) -> SearchResult:
    """Is there a simple path (any endpoints) with at least k arcs?"""
    adj = out_neighbors(g)
    if k <= 0:
        return SearchResult(True, (0,), True, "trivial")
    if k > g.n - 1:
        return SearchResult(False, None, True, "trivial")
    strategy = _pick_exact(g, cfg)
    if strategy == "subset-dp":
        length, path = kernels.longest_path(adj)
        if length >= k:
            return SearchResult(True, tuple(path), True, "subset-dp")
        return SearchResult(False, None, True, "subset-dp")
    if strategy == "bnb":
        found, _, path, completed, nodes = kernels.bnb_path(
            adj, -1, -1, kernels.MODE_ATLEAST, k, cfg.limits.bnb_node_budget
        )
        if found:
            return SearchResult(True, tuple(path), True, "bnb", nodes=nodes)
        return SearchResult(False, None, completed, "bnb", nodes=nodes)
    trials = trial_count(k, cfg.delta)
    found, path, used = kernels.color_coding(adj, k, trials, cfg.seed)
    if found:
        return SearchResult(
            True, tuple(path), True, "color-coding", trials=used
        )
    return SearchResult(
        False, None, False, "color-coding", trials=used, delta=cfg.delta
    )


def long_st_path(
    g: Graph, s: int, t: int, target: int, cfg: SubroutineConfig = DEFAULT_CONFIG
) -> SearchResult:
    """Is there a simple (s, t)-path with at least ``target`` arcs?

    Exact engines only.  Color coding is refused here: conditioning on fixed
    endpoints breaks its uniform-coloring success bound (the colorful-path
    count argument does not survive pinning both ends), so a miss would not
    be covered by delta.
    """
    if cfg.strategy == "color-coding":
        raise ValueError("long_st_path needs an exact engine, not color-coding")
    adj = out_neighbors(g)
    if target <= 0:
        sp = shortest_path(g, s, t)
        if sp is None:
            return SearchResult(False, None, True, "trivial")
        return SearchResult(True, tuple(sp), True, "trivial")
    strategy = _pick_exact(g, cfg)
    if strategy == "subset-dp":
        length, path = kernels.longest_path_from_to(adj, s, t)
        if length >= target:
            return SearchResult(True, tuple(path), True, "subset-dp")
        return SearchResult(False, None, True, "subset-dp")
    found, _, path, completed, nodes = kernels.bnb_path(
        adj, s, t, kernels.MODE_ATLEAST, target, cfg.limits.bnb_node_budget
    )
    if found:
        return SearchResult(True, tuple(path), True, "bnb", nodes=nodes)
    return SearchResult(False, None, completed, "bnb", nodes=nodes)


def exact_detour(
    g: Graph, s: int, t: int, ell: int, cfg: SubroutineConfig = DEFAULT_CONFIG
) -> SearchResult:
    """Is there a simple (s, t)-path of length exactly dist(s, t) + ell?"""
    if cfg.strategy == "color-coding":
        raise ValueError("exact_detour needs an exact engine, not color-coding")
    dist = distances_from(g, s)[t]
    if dist < 0:
        return SearchResult(False, None, True, "trivial")
    want = dist + ell
    if want > g.n - 1:
        return SearchResult(False, None, True, "trivial")
    adj = out_neighbors(g)
    strategy = _pick_exact(g, cfg)
    if strategy == "subset-dp":
        path = kernels.exact_path(adj, s, want, t)
        if path is not None:
            return SearchResult(True, tuple(path), True, "subset-dp")
        return SearchResult(False, None, True, "subset-dp")
    found, _, path, completed, nodes = kernels.bnb_path(
        adj, s, t, kernels.MODE_EXACT, want, cfg.limits.bnb_node_budget
    )
    if found:
        return SearchResult(True, tuple(path), True, "bnb", nodes=nodes)
    return SearchResult(False, None, completed, "bnb", nodes=nodes)
