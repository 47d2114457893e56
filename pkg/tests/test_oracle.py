"""Exact-oracle tests: the brute-force reference implementations in
tests.support are the ground truth, and the oracle must agree with them
whenever it reports ``exact``."""

from __future__ import annotations

from random import Random

import pytest

from detours import (
    OracleLimits,
    UnreachablePair,
    build_digraph,
    build_hat_chain,
    build_undirected,
    detour_oracle,
    hamiltonian_path_from,
    is_simple_path,
    longest_path_oracle,
    longest_st_path_oracle,
)
from detours.graphs import distances_from

from tests.support import (
    brute_has_ham_path,
    brute_longest_path,
    brute_longest_st,
    rand_digraph,
    rand_undirected,
)

# Frozen regression value: the exact longest-path length of the single-link
# chain gadget, computed once by the subset DP and branch-and-bound oracles
# in agreement.
HAT_CHAIN_1_LONGEST = 29


def test_longest_path_oracle_matches_brute_force() -> None:
    rng = Random(301)
    for _ in range(120):
        n = rng.randint(1, 9)
        directed = rng.random() < 0.6
        g = (
            rand_digraph(rng, n, rng.choice([0.2, 0.4, 0.6]))
            if directed
            else rand_undirected(rng, n, rng.choice([0.25, 0.45]))
        )
        ans = longest_path_oracle(g)
        assert ans.exact
        assert ans.value == brute_longest_path(g)
        assert is_simple_path(g, ans.witness)
        assert len(ans.witness) - 1 == ans.value


def test_longest_st_path_oracle_matches_brute_force() -> None:
    rng = Random(302)
    for _ in range(120):
        n = rng.randint(2, 9)
        g = rand_digraph(rng, n, 0.35)
        s, t = 0, n - 1
        best = brute_longest_st(g, s, t)
        ans = longest_st_path_oracle(g, s, t)
        if best < 0:
            assert ans.value is None and ans.witness is None and ans.exact
            continue
        assert ans.exact and ans.value == best
        assert ans.witness[0] == s and ans.witness[-1] == t
        assert is_simple_path(g, ans.witness)


def test_detour_oracle_reports_distance_and_surplus() -> None:
    rng = Random(303)
    for _ in range(120):
        n = rng.randint(2, 9)
        directed = rng.random() < 0.6
        g = (
            rand_digraph(rng, n, 0.4)
            if directed
            else rand_undirected(rng, n, 0.4)
        )
        s, t = 0, n - 1
        best = brute_longest_st(g, s, t)
        if best < 0:
            with pytest.raises(UnreachablePair):
                detour_oracle(g, s, t)
            continue
        ans = detour_oracle(g, s, t)
        dist = distances_from(g, s)[t]
        assert ans.dist == dist
        assert ans.exact
        assert ans.k_star == best - dist
        assert is_simple_path(g, ans.witness)
        assert len(ans.witness) - 1 == dist + ans.k_star


def test_unreachable_pair_message_names_the_pair() -> None:
    g = build_digraph(3, [(0, 1), (1, 2)])
    with pytest.raises(UnreachablePair, match="unreachable from 2"):
        detour_oracle(g, 2, 0)


def test_tight_budget_degrades_to_inexact_lower_bound() -> None:
    rng = Random(304)
    degraded = 0
    for _ in range(40):
        g = rand_digraph(rng, 9, 0.5)
        limits = OracleLimits(dp_vertex_cap=2, bnb_node_budget=5)
        ans = longest_path_oracle(g, limits)
        exact = longest_path_oracle(g)
        assert ans.value <= exact.value
        assert is_simple_path(g, ans.witness)
        assert len(ans.witness) - 1 == ans.value
        if not ans.exact:
            degraded += 1
    assert degraded > 0, "budget of 5 nodes should not stay exact on n=9"


def test_dp_and_bnb_agree_when_both_exact() -> None:
    rng = Random(305)
    for _ in range(60):
        n = rng.randint(2, 9)
        g = rand_digraph(rng, n, 0.4)
        via_dp = longest_path_oracle(g, OracleLimits(dp_vertex_cap=20, bnb_node_budget=10**8))
        via_bnb = longest_path_oracle(g, OracleLimits(dp_vertex_cap=1, bnb_node_budget=10**8))
        assert via_dp.exact and via_bnb.exact
        assert via_dp.value == via_bnb.value


def test_hat_chain_1_longest_path_regression() -> None:
    g, _ = build_hat_chain(1)
    ans = longest_path_oracle(g)
    assert ans.exact
    assert 22 <= ans.value <= 35
    assert ans.value == HAT_CHAIN_1_LONGEST
    assert is_simple_path(g, ans.witness)


def test_hamiltonian_path_from_anchor() -> None:
    cycle = build_undirected(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    for w in range(5):
        path = hamiltonian_path_from(cycle, w)
        assert path is not None
        assert path[0] == w and len(path) == 5
        assert is_simple_path(cycle, path)
    star = build_undirected(4, [(0, 1), (0, 2), (0, 3)])
    assert hamiltonian_path_from(star, 0) is None
    assert hamiltonian_path_from(star, 1) is None


def test_hamiltonian_path_from_matches_brute_force() -> None:
    rng = Random(306)
    yes = 0
    for _ in range(80):
        n = rng.randint(2, 7)
        g = rand_undirected(rng, n, rng.choice([0.35, 0.55, 0.75]))
        anchored = [hamiltonian_path_from(g, w) is not None for w in range(n)]
        assert any(anchored) == brute_has_ham_path(g) or not brute_has_ham_path(g)
        if brute_has_ham_path(g):
            assert any(anchored)
            yes += 1
        else:
            assert not any(anchored)
    assert yes > 0
