"""Named comparison suites.

Each suite runs a fixed randomized workload (seeded, so reruns see the same
instances), cross-checks results between two independent implementations,
and reports agreement plus wall-clock time.  Suites return a report object;
the CLI renders it as an aligned table.

    detour-vs-oracle   pipeline verdicts against the brute-force detour oracle
    lpad-vs-oracle     above-diameter verdicts against the longest-path oracle
    kernel-backends    pure-Python kernels against the compiled twin
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import kernels
from .detour import solve_directed_detour, solve_undirected_detour
from .diameter import LpadQuery, solve_lpad
from .graphs import (
    DirectedGraph,
    UndirectedGraph,
    build_digraph,
    build_undirected,
    is_2_connected_undirected,
    is_2_strongly_connected,
    diameter_and_pair,
)
from .graphs import UnreachablePair
from .oracle import detour_oracle, longest_path_oracle

SUITES = ("detour-vs-oracle", "lpad-vs-oracle", "kernel-backends")


@dataclass(frozen=True)
class BenchReport:
    suite: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    summary: str
    ok: bool


def render_report(report: BenchReport) -> str:
    table = [report.columns, *report.rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(report.columns))]
    lines = [f"suite {report.suite}"]
    for row in table:
        lines.append("  " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    lines.append(report.summary)
    return "\n".join(lines) + "\n"


def run_suite(name: str, seed: int = 0) -> BenchReport:
    if name == "detour-vs-oracle":
        return _suite_detour_vs_oracle(seed)
    if name == "lpad-vs-oracle":
        return _suite_lpad_vs_oracle(seed)
    if name == "kernel-backends":
        return _suite_kernel_backends(seed)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")


# ---------------------------------------------------------------------------
# Instance generators (suite-local; the test suite has richer ones).


def _rand_digraph(rng: random.Random, n: int, p: float) -> DirectedGraph:
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return build_digraph(n, arcs)


def _rand_undirected(rng: random.Random, n: int, p: float) -> UndirectedGraph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return build_undirected(n, edges)


def _rand_2connected(rng: random.Random, n: int) -> UndirectedGraph:
    """Cycle plus random chords, resampled until 2-connected."""
    while True:
        edges = {(i, (i + 1) % n) for i in range(n)}
        extra = rng.randint(1, n)
        for _ in range(extra):
            u, v = rng.sample(range(n), 2)
            edges.add((min(u, v), max(u, v)))
        g = build_undirected(n, sorted({(min(a, b), max(a, b)) for a, b in edges}))
        if is_2_connected_undirected(g):
            return g


def _rand_2sc(rng: random.Random, n: int) -> DirectedGraph:
    """Directed cycle plus random arcs, resampled until 2-strongly-connected."""
    while True:
        arcs = {(i, (i + 1) % n) for i in range(n)}
        for _ in range(rng.randint(n, 2 * n)):
            u, v = rng.sample(range(n), 2)
            arcs.add((u, v))
        g = build_digraph(n, sorted(arcs))
        if is_2_strongly_connected(g):
            return g


# ---------------------------------------------------------------------------
# Suites.


def _suite_detour_vs_oracle(seed: int) -> BenchReport:
    rng = random.Random(seed)
    rows = []
    total = agree_total = 0
    for label, directed, count in (("directed", True, 60), ("undirected", False, 40)):
        queries = agreed = 0
        t_solver = t_oracle = 0.0
        for _ in range(count):
            n = rng.randint(5, 9)
            p = rng.choice([0.2, 0.3, 0.45])
            g = _rand_digraph(rng, n, p) if directed else _rand_undirected(rng, n, p)
            s, t = rng.sample(range(n), 2)
            try:
                t0 = time.perf_counter()
                oracle = detour_oracle(g, s, t)
                t_oracle += time.perf_counter() - t0
            except UnreachablePair:
                continue  # the solver's own "no" on these is tested elsewhere
            for k in (1, 2, 3):
                t0 = time.perf_counter()
                if directed:
                    ans = solve_directed_detour(g, s, t, k)
                else:
                    ans = solve_undirected_detour(g, s, t, k)
                t_solver += time.perf_counter() - t0
                want = "yes" if (oracle.k_star or 0) >= k else "no"
                queries += 1
                if ans.verdict == want:
                    agreed += 1
        rows.append(
            (
                label,
                str(queries),
                str(agreed),
                f"{1000 * t_solver / max(queries, 1):.2f}",
                f"{1000 * t_oracle / max(queries, 1):.2f}",
            )
        )
        total += queries
        agree_total += agreed
    pct = 100.0 * agree_total / max(total, 1)
    return BenchReport(
        "detour-vs-oracle",
        ("class", "queries", "agree", "solver-ms", "oracle-ms"),
        tuple(rows),
        f"agreement {pct:.1f}% over {total} queries",
        agree_total == total,
    )


def _suite_lpad_vs_oracle(seed: int) -> BenchReport:
    rng = random.Random(seed)
    rows = []
    total = agree_total = 0
    specs = (
        ("undirected-2connected", "undirected2c", 30, (0, 1, 2, 3)),
        ("directed-2sc", "directed2sc", 25, (0, 1, 2, 3, 4, 5)),
        ("oracle-only", "oracle", 20, (0, 2, 4)),
    )
    for mode, label, count, ks in specs:
        queries = agreed = 0
        t_solver = 0.0
        for _ in range(count):
            n = rng.randint(5, 10)
            if mode == "undirected-2connected":
                g = _rand_2connected(rng, n)
            elif mode == "directed-2sc":
                g = _rand_2sc(rng, n)
            else:
                # Any strongly connected digraph will do for the oracle mode.
                cyc = {(i, (i + 1) % n) for i in range(n)}
                for _ in range(rng.randint(1, 2 * n)):
                    u, v = rng.sample(range(n), 2)
                    cyc.add((u, v))
                g = build_digraph(n, sorted(cyc))
            d, _, _ = diameter_and_pair(g)
            best = longest_path_oracle(g)
            for k in ks:
                t0 = time.perf_counter()
                ans = solve_lpad(LpadQuery(g, k, mode))
                t_solver += time.perf_counter() - t0
                want = "yes" if best.value >= d + k else "no"
                queries += 1
                if ans.verdict == want:
                    agreed += 1
        rows.append(
            (
                label,
                str(queries),
                str(agreed),
                f"{1000 * t_solver / max(queries, 1):.2f}",
            )
        )
        total += queries
        agree_total += agreed
    pct = 100.0 * agree_total / max(total, 1)
    return BenchReport(
        "lpad-vs-oracle",
        ("mode", "queries", "agree", "solver-ms"),
        tuple(rows),
        f"agreement {pct:.1f}% over {total} queries",
        agree_total == total,
    )


def _time_workload(fn, backend) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = fn(backend)
    return time.perf_counter() - t0, out


def _suite_kernel_backends(seed: int) -> BenchReport:
    rng = random.Random(seed)

    dp_adj = _rand_adj(rng, 17, 0.3)
    bnb_adj = _rand_adj(rng, 40, 0.12)
    chain_adj = _rand_adj(rng, 36, 0.14)
    cc_adj = _rand_adj(rng, 60, 0.10)
    chain_queries = []
    while len(chain_queries) < 25:
        s, w, v, t = rng.sample(range(36), 4)
        chain_queries.append((s, w, v, t))

    workloads = (
        ("subset-dp", lambda b: b.longest_path(dp_adj)),
        ("bnb-atleast", lambda b: b.bnb_path(bnb_adj, 0, 39, b.MODE_ATLEAST, 14, 3_000_000)),
        (
            "chain-milestones",
            lambda b: [
                b.chain_path(chain_adj, s, w, v, t, 400_000)
                for s, w, v, t in chain_queries
            ],
        ),
        ("color-coding", lambda b: b.color_coding(cc_adj, 7, 40, 12345)),
    )

    names = kernels.available_backends()
    rows = []
    all_match = True
    for label, fn in workloads:
        times = {}
        results = {}
        for name in names:
            elapsed, out = _time_workload(fn, kernels.get_backend(name))
            times[name] = elapsed
            results[name] = out
        match = all(results[name] == results[names[0]] for name in names)
        all_match = all_match and match
        row = [label]
        for name in names:
            row.append(f"{1000 * times[name]:.2f}")
        if len(names) == 2:
            base, other = times[names[0]], times[names[1]]
            row.append(f"{base / other:.1f}x" if other > 0 else "n/a")
        row.append("yes" if match else "NO")
        rows.append(tuple(row))

    columns = ["workload"] + [f"{n}-ms" for n in names]
    if len(names) == 2:
        columns.append("speedup")
    columns.append("match")
    note = "" if len(names) == 2 else " (compiled backend not built)"
    return BenchReport(
        "kernel-backends",
        tuple(columns),
        tuple(rows),
        f"results identical across backends: {'yes' if all_match else 'NO'}{note}",
        all_match,
    )


def _rand_adj(rng: random.Random, n: int, p: float) -> list[list[int]]:
    return [
        [v for v in range(n) if v != u and rng.random() < p] for u in range(n)
    ]
