"""Above-guarantee long-path search.

Two problem families, one toolbox.  The detour solvers decide whether a
simple (s, t)-path exists that is at least k arcs longer than the shortest
one; the above-diameter solvers decide the same question against the graph's
diameter.  Around them: exact brute-force oracles, a gadget-graph generator
with verifier and two Hamiltonian-path reductions, plain-text file formats,
a CLI, and benchmark suites comparing the pure-Python kernels against their
compiled twin (set DETOURS_PURE=1 to force the fallback).
"""

from __future__ import annotations

from .chains import (
    ChainAnswer,
    ChainQuery,
    ChainSolution,
    chain_backend_names,
    path_through,
    solve_chain3,
)
from .detour import (
    STAGES,
    DetourAnswer,
    StageEvent,
    explain,
    solve_directed_detour,
    solve_undirected_detour,
)
from .diameter import (
    DIAM_GUARANTEE_LOG2,
    FAILURE_LABELS,
    MODES,
    BuilderOutcome,
    LpadAnswer,
    LpadQuery,
    build_diam_plus4_path,
    solve_lpad,
    solve_lpad_undirected_2connected,
)
from .fileio import (
    FileFormatError,
    WitnessDocument,
    dumps_blueprint,
    dumps_graph,
    dumps_reduction,
    load_blueprint,
    load_graph,
    loads_blueprint,
    loads_graph,
    parse_witness,
    render_witness,
    write_blueprint,
    write_graph,
    write_reduction,
)
from .gadgets import (
    KIND_DIRECTED_2SC,
    KIND_UNDIRECTED_K1,
    ClauseResult,
    GadgetBlueprint,
    ReductionInstance,
    VerifyReport,
    build_hat_chain,
    lift_ham_witness,
    reduce_2sc_lpad,
    reduce_2sc_lpad_family,
    reduce_undirected_k1,
    verify_hat_chain,
    witness_h8_path,
    witness_long_path,
)
from .graphs import (
    DirectedGraph,
    GraphError,
    PathWitness,
    UndirectedGraph,
    UnreachablePair,
    build_digraph,
    build_undirected,
    diameter_and_pair,
    is_2_connected_undirected,
    is_2_strongly_connected,
    is_simple_path,
    symmetrize,
    to_digraph,
    transpose,
    two_internally_disjoint_paths,
)
from .kernels import available_backends, backend_name
from .oracle import (
    INCONCLUSIVE,
    DetourOracleAnswer,
    OracleAnswer,
    OracleLimits,
    detour_oracle,
    hamiltonian_path_from,
    longest_path_oracle,
    longest_st_path_oracle,
)
from .subroutines import (
    STRATEGIES,
    DEFAULT_CONFIG,
    SearchResult,
    SubroutineConfig,
    exact_detour,
    has_path_at_least,
    long_st_path,
    trial_count,
)

__version__ = "0.1.0"

__all__ = [
    "ChainAnswer",
    "ChainQuery",
    "ChainSolution",
    "chain_backend_names",
    "path_through",
    "solve_chain3",
    "STAGES",
    "DetourAnswer",
    "StageEvent",
    "explain",
    "solve_directed_detour",
    "solve_undirected_detour",
    "DIAM_GUARANTEE_LOG2",
    "FAILURE_LABELS",
    "MODES",
    "BuilderOutcome",
    "LpadAnswer",
    "LpadQuery",
    "build_diam_plus4_path",
    "solve_lpad",
    "solve_lpad_undirected_2connected",
    "FileFormatError",
    "WitnessDocument",
    "dumps_blueprint",
    "dumps_graph",
    "dumps_reduction",
    "load_blueprint",
    "load_graph",
    "loads_blueprint",
    "loads_graph",
    "parse_witness",
    "render_witness",
    "write_blueprint",
    "write_graph",
    "write_reduction",
    "KIND_DIRECTED_2SC",
    "KIND_UNDIRECTED_K1",
    "ClauseResult",
    "GadgetBlueprint",
    "ReductionInstance",
    "VerifyReport",
    "build_hat_chain",
    "lift_ham_witness",
    "reduce_2sc_lpad",
    "reduce_2sc_lpad_family",
    "reduce_undirected_k1",
    "verify_hat_chain",
    "witness_h8_path",
    "witness_long_path",
    "DirectedGraph",
    "GraphError",
    "PathWitness",
    "UndirectedGraph",
    "UnreachablePair",
    "build_digraph",
    "build_undirected",
    "diameter_and_pair",
    "is_2_connected_undirected",
    "is_2_strongly_connected",
    "is_simple_path",
    "symmetrize",
    "to_digraph",
    "transpose",
    "two_internally_disjoint_paths",
    "available_backends",
    "backend_name",
    "INCONCLUSIVE",
    "DetourOracleAnswer",
    "OracleAnswer",
    "OracleLimits",
    "detour_oracle",
    "hamiltonian_path_from",
    "longest_path_oracle",
    "longest_st_path_oracle",
    "STRATEGIES",
    "DEFAULT_CONFIG",
    "SearchResult",
    "SubroutineConfig",
    "exact_detour",
    "has_path_at_least",
    "long_st_path",
    "trial_count",
    "__version__",
]
