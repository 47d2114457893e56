"""Command-line front end.

Subcommands cover the whole library surface: ``detour`` and ``lpad`` run the
solvers and print a witness document, ``gen`` writes generated instances to
graph files, ``verify`` re-checks a generated chain against its blueprint,
``oracle`` exposes the brute-force answers, and ``bench`` runs a named
comparison suite.

Exit codes are part of the contract:

    0  yes (or: command succeeded)
    1  no (or: verification/bench found a failure)
    2  usage error, parse error, or violated precondition
    3  inconclusive (a budget ran out before the answer was certain)

Vertices on the command line are 1-indexed, matching the graph file format.
"""

from __future__ import annotations

import argparse
import sys

from .bench import SUITES, render_report, run_suite
from .chains import chain_backend_names
from .detour import solve_directed_detour, solve_undirected_detour
from .diameter import LpadQuery, solve_lpad
from .fileio import (
    FileFormatError,
    WitnessDocument,
    load_blueprint,
    load_graph,
    render_witness,
    write_blueprint,
    write_graph,
    write_reduction,
)
from .gadgets import (
    build_hat_chain,
    reduce_2sc_lpad,
    reduce_undirected_k1,
    verify_hat_chain,
)
from .graphs import DirectedGraph, GraphError, UndirectedGraph, diameter_and_pair
from .oracle import (
    OracleLimits,
    detour_oracle,
    longest_path_oracle,
    longest_st_path_oracle,
)
from .subroutines import STRATEGIES, SubroutineConfig

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_VERDICT_EXITS = {"yes": EXIT_YES, "no": EXIT_NO, "inconclusive": EXIT_INCONCLUSIVE}

_LPAD_MODES = {
    "undirected2c": "undirected-2connected",
    "directed2sc": "directed-2sc",
    "oracle": "oracle-only",
}


def _limits(args: argparse.Namespace) -> OracleLimits:
    return OracleLimits(
        dp_vertex_cap=args.oracle_cap, bnb_node_budget=args.budget
    )


def _config(args: argparse.Namespace) -> SubroutineConfig:
    return SubroutineConfig(
        strategy=args.strategy,
        seed=args.seed,
        delta=args.delta,
        limits=_limits(args),
    )


def _vertex(value: int, n: int, name: str) -> int:
    if not 1 <= value <= n:
        raise GraphError(f"--{name} {value} out of range 1..{n}")
    return value - 1


def _solver_flags(p: argparse.ArgumentParser, with_threads: bool) -> None:
    p.add_argument("--seed", type=int, default=0, help="randomized-strategy seed")
    p.add_argument(
        "--strategy",
        choices=STRATEGIES,
        default="auto",
        help="path-search engine (default auto)",
    )
    p.add_argument(
        "--delta",
        type=float,
        default=1e-3,
        help="miss probability budget for the randomized strategy",
    )
    p.add_argument(
        "--oracle-cap",
        type=int,
        default=20,
        metavar="C",
        help="largest vertex count handed to the subset DP (default 20)",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=100_000_000,
        metavar="N",
        help="branch-and-bound node budget (default 1e8)",
    )
    if with_threads:
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            metavar="N",
            help="worker threads for the pair-enumeration stage",
        )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="detours",
        description="Above-guarantee long-path solvers, generators, and oracles.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detour", help="path at least k longer than the shortest")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--source", type=int, required=True, help="source vertex (1-indexed)")
    p.add_argument("--target", type=int, required=True, help="target vertex (1-indexed)")
    p.add_argument("--k", type=int, required=True, help="required detour length")
    p.add_argument(
        "--undirected",
        action="store_true",
        help="assert the input is undirected (ug header)",
    )
    p.add_argument(
        "--backend",
        choices=chain_backend_names(),
        default="exhaustive",
        help="three-leg chain solver backend",
    )
    _solver_flags(p, with_threads=True)
    p.set_defaults(func=cmd_detour)

    p = sub.add_parser("lpad", help="path at least diameter + k")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--k", type=int, required=True, help="length above the diameter")
    p.add_argument(
        "--mode",
        choices=sorted(_LPAD_MODES),
        required=True,
        help="solver class: undirected2c, directed2sc, or oracle",
    )
    _solver_flags(p, with_threads=False)
    p.set_defaults(func=cmd_lpad)

    p = sub.add_parser("gen", help="write a generated instance to a file")
    gsub = p.add_subparsers(dest="generator", required=True)

    gp = gsub.add_parser("hat-chain", help="two-row chain of hat gadgets")
    gp.add_argument("--ell", type=int, required=True, help="chain size parameter")
    gp.add_argument("-o", "--out", required=True, help="output graph file")
    gp.add_argument("--blueprint", help="also write the role blueprint here")
    gp.set_defaults(func=cmd_gen_hat_chain)

    gp = gsub.add_parser(
        "reduce-k1", help="Hamiltonian path as a one-above-diameter question"
    )
    gp.add_argument("--graph", required=True, help="undirected source graph")
    gp.add_argument("-o", "--out", required=True, help="output graph file")
    gp.add_argument("--blueprint", help="also write the embedding document here")
    gp.set_defaults(func=cmd_gen_reduce_k1)

    gp = gsub.add_parser(
        "reduce-2sc", help="Hamiltonian path as a k-above-diameter question"
    )
    gp.add_argument("--graph", required=True, help="undirected 2-connected source graph")
    gp.add_argument("--k", type=int, required=True, help="target detour above diameter")
    gp.add_argument("--w", type=int, required=True, help="start vertex (1-indexed)")
    gp.add_argument("-o", "--out", required=True, help="output graph file")
    gp.add_argument("--blueprint", help="also write the embedding document here")
    gp.set_defaults(func=cmd_gen_reduce_2sc)

    p = sub.add_parser("verify", help="re-check a generated instance")
    vsub = p.add_subparsers(dest="target_kind", required=True)
    vp = vsub.add_parser("hat-chain", help="check a chain file against its blueprint")
    vp.add_argument("--graph", required=True)
    vp.add_argument("--blueprint", required=True)
    vp.set_defaults(func=cmd_verify_hat_chain)

    p = sub.add_parser("oracle", help="brute-force reference answers")
    osub = p.add_subparsers(dest="oracle_kind", required=True)
    for kind in ("longest-path", "longest-st-path", "detour", "diameter"):
        op = osub.add_parser(kind)
        op.add_argument("--graph", required=True)
        if kind in ("longest-st-path", "detour"):
            op.add_argument("--source", type=int, required=True)
            op.add_argument("--target", type=int, required=True)
        op.add_argument("--oracle-cap", type=int, default=20, metavar="C")
        op.add_argument("--budget", type=int, default=100_000_000, metavar="N")
        op.set_defaults(func=cmd_oracle, oracle_kind=kind)

    p = sub.add_parser("bench", help="run a named comparison suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return top


# ---------------------------------------------------------------------------
# Solver commands.


def cmd_detour(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if args.undirected and not isinstance(g, UndirectedGraph):
        raise GraphError(
            "--undirected given but the file has a directed header; "
            "re-encode it with 'p ug' to solve it undirected"
        )
    if args.strategy == "color-coding":
        raise GraphError(
            "the detour pipeline needs an exact strategy "
            "(color-coding cannot certify its subqueries)"
        )
    s = _vertex(args.source, g.n, "source")
    t = _vertex(args.target, g.n, "target")
    if s == t:
        raise GraphError("source and target must differ")
    cfg = _config(args)
    if isinstance(g, UndirectedGraph):
        answer = solve_undirected_detour(
            g, s, t, args.k, cfg, args.backend, args.threads
        )
    else:
        answer = solve_directed_detour(
            g, s, t, args.k, cfg, args.backend, args.threads
        )
    doc = WitnessDocument(
        found=answer.verdict == "yes",
        length=answer.witness.length if answer.witness else None,
        baseline_kind="dist",
        baseline_value=answer.dist if answer.dist is not None else -1,
        path=answer.witness.vertices if answer.witness else (),
        stage=answer.stage,
        meta="inconclusive" if answer.verdict == "inconclusive" else "exact",
        notes=answer.inconclusive_events,
    )
    sys.stdout.write(render_witness(doc))
    return _VERDICT_EXITS[answer.verdict]


def cmd_lpad(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    cfg = _config(args)
    query = LpadQuery(g, args.k, _LPAD_MODES[args.mode])
    answer = solve_lpad(query, cfg)
    if answer.verdict == "inconclusive" and cfg.strategy == "color-coding":
        meta, delta = "randomized", cfg.delta
    elif answer.verdict == "inconclusive":
        meta, delta = "inconclusive", None
    else:
        meta, delta = "exact", None
    doc = WitnessDocument(
        found=answer.verdict == "yes",
        length=answer.witness.length if answer.witness else None,
        baseline_kind="diameter",
        baseline_value=answer.diameter,
        path=answer.witness.vertices if answer.witness else (),
        stage=answer.stage,
        meta=meta,
        delta=delta,
        notes=answer.notes + answer.inconclusive_events,
    )
    sys.stdout.write(render_witness(doc))
    return _VERDICT_EXITS[answer.verdict]


# ---------------------------------------------------------------------------
# Generators.


def cmd_gen_hat_chain(args: argparse.Namespace) -> int:
    g, bp = build_hat_chain(args.ell)
    write_graph(g, args.out, comments=(f"hat-chain ell {bp.ell}",))
    if args.blueprint:
        write_blueprint(bp, args.blueprint)
    print(f"wrote {args.out} (n={g.n}, m={len(g.arcs)}, diameter {8 * bp.ell + 10})")
    return EXIT_YES


def cmd_gen_reduce_k1(args: argparse.Namespace) -> int:
    src = load_graph(args.graph)
    inst = reduce_undirected_k1(src)
    write_graph(
        inst.graph,
        args.out,
        comments=(f"reduce-k1 of an n={inst.source_graph.n} graph",),
    )
    if args.blueprint:
        write_reduction(inst, args.blueprint)
    print(
        f"wrote {args.out} (n={inst.graph.n}, m={len(inst.graph.edges)}, "
        f"claimed diameter {inst.claimed_diameter})"
    )
    return EXIT_YES


def cmd_gen_reduce_2sc(args: argparse.Namespace) -> int:
    src = load_graph(args.graph)
    if not isinstance(src, UndirectedGraph):
        raise GraphError("the large-k reduction takes an undirected graph")
    w = _vertex(args.w, src.n, "w")
    inst = reduce_2sc_lpad(src, w, args.k)
    write_graph(
        inst.graph,
        args.out,
        comments=(f"reduce-2sc k {args.k} w {args.w}",),
    )
    if args.blueprint:
        write_reduction(inst, args.blueprint)
    print(
        f"wrote {args.out} (n={inst.graph.n}, m={len(inst.graph.arcs)}, "
        f"claimed diameter {inst.claimed_diameter})"
    )
    return EXIT_YES


# ---------------------------------------------------------------------------
# Verification and oracles.


def cmd_verify_hat_chain(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if not isinstance(g, DirectedGraph):
        raise GraphError("hat chains are directed graphs")
    bp = load_blueprint(args.blueprint)
    report = verify_hat_chain(g, bp)
    for clause in report.clauses:
        mark = "pass" if clause.passed else "FAIL"
        detail = f"  ({clause.detail})" if clause.detail else ""
        print(f"{mark}  {clause.name}{detail}")
    if report.ok:
        print("all clauses pass")
        return EXIT_YES
    print(f"failing: {', '.join(report.failing())}")
    return EXIT_NO


def _print_oracle_answer(value, witness, exact: bool) -> int:
    print(f"value {value if value is not None else 'none'}")
    if witness is not None:
        print("witness " + " ".join(str(v + 1) for v in witness))
    print(f"exact {'yes' if exact else 'no'}")
    return EXIT_YES if exact else EXIT_INCONCLUSIVE


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    limits = OracleLimits(
        dp_vertex_cap=args.oracle_cap, bnb_node_budget=args.budget
    )
    kind = args.oracle_kind
    if kind == "diameter":
        d, a, b = diameter_and_pair(g)
        print(f"diameter {d}")
        print(f"between {a + 1} {b + 1}")
        return EXIT_YES
    if kind == "longest-path":
        ans = longest_path_oracle(g, limits)
        return _print_oracle_answer(ans.value, ans.witness, ans.exact)
    s = _vertex(args.source, g.n, "source")
    t = _vertex(args.target, g.n, "target")
    if kind == "longest-st-path":
        ans = longest_st_path_oracle(g, s, t, limits)
        return _print_oracle_answer(ans.value, ans.witness, ans.exact)
    det = detour_oracle(g, s, t, limits)
    print(f"dist {det.dist}")
    print(f"k-star {det.k_star if det.k_star is not None else 'none'}")
    if det.witness is not None:
        print("witness " + " ".join(str(v + 1) for v in det.witness))
    print(f"exact {'yes' if det.exact else 'no'}")
    return EXIT_YES if det.exact else EXIT_INCONCLUSIVE


def cmd_bench(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, seed=args.seed)
    sys.stdout.write(render_report(report))
    return EXIT_YES if report.ok else EXIT_NO


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileFormatError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
