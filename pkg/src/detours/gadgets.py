"""Hat-chain graphs and the hardness reductions that use them.

The hat-chain family is a parameterized digraph built from three hand-sized
pieces: a source cap around ``s``, a mirror-image sink cap around ``t``, and
a chain of ten-vertex "hat" gadgets in between, glued by identifying
boundary vertices.  The result is 2-strongly-connected, has diameter
8*ell + 10, and carries a longest path of exactly diameter + 4 — which is
what makes it useful as a tightness example and as the backbone of the
large-k hardness reduction.

Everything here is deterministic: vertex ids are assigned in a fixed order,
so the same ``ell`` always produces byte-identical graphs.  The blueprint
records which id plays which role (``s``, ``s1`` .. ``s14``, per-hat ``h1``
.. ``h10``, ``t1`` .. ``t14``, ``t``); identified vertices carry every role
name that lands on them.

``verify_hat_chain`` re-derives the family's claimed properties from the
built graph instead of trusting the constructor, and the witness builders
return concrete paths that are validated arc by arc.  The reductions map
Hamiltonian-path instances to above-diameter path instances; both are exact
constructions with checkable counts.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

from .graphs import (
    DirectedGraph,
    Graph,
    GraphError,
    PathWitness,
    UndirectedGraph,
    build_digraph,
    build_undirected,
    diameter_and_pair,
    distances_from,
    is_2_connected_undirected,
    is_2_strongly_connected,
    is_simple_path,
)

KIND_UNDIRECTED_K1 = "undirected-k1"
KIND_DIRECTED_2SC = "directed-2sc"


def _source_arcs() -> list[tuple[str, str]]:
    arcs: list[tuple[str, str]] = [("s", "s1"), ("s", "s9")]
    arcs += [(f"s{i}", f"s{i + 1}") for i in range(1, 8)]
    arcs += [(f"s{i}", f"s{i + 1}") for i in range(9, 14)]
    arcs += [("s9", "s2"), ("s1", "s10"), ("s4", "s13"), ("s14", "s7")]
    arcs += [
        ("s2", "s"),
        ("s10", "s"),
        ("s2", "s9"),
        ("s10", "s1"),
        ("s3", "s10"),
        ("s11", "s2"),
        ("s6", "s3"),
        ("s5", "s4"),
        ("s7", "s5"),
        ("s8", "s6"),
        ("s12", "s11"),
        ("s13", "s12"),
    ]
    return arcs


# Two short chains, four cross arcs, and a 4-cycle on {h2, h6, h7, h8}.
_HAT_ARCS: tuple[tuple[str, str], ...] = (
    ("h1", "h2"),
    ("h2", "h3"),
    ("h4", "h5"),
    ("h5", "h6"),
    ("h6", "h7"),
    ("h7", "h8"),
    ("h8", "h9"),
    ("h9", "h10"),
    ("h5", "h1"),
    ("h9", "h5"),
    ("h10", "h4"),
    ("h3", "h9"),
    ("h8", "h7"),
    ("h7", "h6"),
    ("h6", "h2"),
    ("h2", "h8"),
)


def _sink_arcs() -> list[tuple[str, str]]:
    # The sink cap is the transpose image of the source cap under s -> t.
    def ren(role: str) -> str:
        return "t" if role == "s" else "t" + role[1:]

    return [(ren(v), ren(u)) for (u, v) in _source_arcs()]


@dataclass(frozen=True)
class GadgetBlueprint:
    """Role-to-vertex map for one hat-chain graph."""

    ell: int
    roles: Mapping[str, int]
    orientations: tuple[str, ...]  # per hat, "top" or "bottom"

    @property
    def hat_count(self) -> int:
        return 2 * self.ell - 1

    @property
    def median_hat(self) -> int:
        return self.ell

    @property
    def n(self) -> int:
        return 16 * self.ell + 20

    def vertex(self, role: str) -> int:
        return self.roles[role]

    def hat_vertex(self, j: int, name: str) -> int:
        return self.roles[f"hat{j}.{name}"]

    def hat_vertices(self, j: int) -> dict[str, int]:
        return {f"h{i}": self.hat_vertex(j, f"h{i}") for i in range(1, 11)}

    def top_row(self) -> tuple[int, ...]:
        seq = [self.vertex("s")]
        seq += [self.vertex(f"s{i}") for i in range(1, 9)]
        for j in range(1, self.hat_count + 1):
            if j % 2 == 1:
                seq += [self.hat_vertex(j, "h2"), self.hat_vertex(j, "h3")]
            else:
                seq += [self.hat_vertex(j, f"h{i}") for i in range(5, 11)]
        seq += [self.vertex(f"t{i}") for i in range(7, 0, -1)]
        seq.append(self.vertex("t"))
        return tuple(seq)

    def bottom_row(self) -> tuple[int, ...]:
        seq = [self.vertex("s")]
        seq += [self.vertex(f"s{i}") for i in range(9, 15)]
        for j in range(1, self.hat_count + 1):
            if j % 2 == 1:
                seq += [self.hat_vertex(j, f"h{i}") for i in range(5, 11)]
            else:
                seq += [self.hat_vertex(j, "h2"), self.hat_vertex(j, "h3")]
        seq += [self.vertex(f"t{i}") for i in range(13, 8, -1)]
        seq.append(self.vertex("t"))
        return tuple(seq)


def build_hat_chain(ell: int) -> tuple[DirectedGraph, GadgetBlueprint]:
    """One source cap, 2*ell - 1 hats, one sink cap, glued into a chain."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    roles: dict[str, int] = {"s": 0}
    for i in range(1, 15):
        roles[f"s{i}"] = i
    next_id = 15
    hat_count = 2 * ell - 1
    for j in range(1, hat_count + 1):
        if j == 1:
            roles["hat1.h1"] = roles["s8"]
            roles["hat1.h4"] = roles["s14"]
        else:
            roles[f"hat{j}.h1"] = roles[f"hat{j - 1}.h10"]
            roles[f"hat{j}.h4"] = roles[f"hat{j - 1}.h3"]
        for name in ("h2", "h3", "h5", "h6", "h7", "h8", "h9", "h10"):
            roles[f"hat{j}.{name}"] = next_id
            next_id += 1
    roles["t"] = next_id
    for i in range(1, 8):
        roles[f"t{i}"] = next_id + i
    for i in range(9, 14):
        roles[f"t{i}"] = next_id + i - 1
    roles["t8"] = roles[f"hat{hat_count}.h3"]
    roles["t14"] = roles[f"hat{hat_count}.h10"]
    n = next_id + 13
    assert n == 16 * ell + 20

    arcs: set[tuple[int, int]] = set()
    for u, v in _source_arcs():
        arcs.add((roles[u], roles[v]))
    for j in range(1, hat_count + 1):
        for u, v in _HAT_ARCS:
            arcs.add((roles[f"hat{j}.{u}"], roles[f"hat{j}.{v}"]))
    for u, v in _sink_arcs():
        arcs.add((roles[u], roles[v]))
    assert len(arcs) == 32 * ell + 44, f"arc count {len(arcs)}"

    orientations = tuple("top" if j % 2 == 1 else "bottom" for j in range(1, hat_count + 1))
    bp = GadgetBlueprint(ell=ell, roles=roles, orientations=orientations)
    g = build_digraph(n, sorted(arcs))
    return g, bp


# ---------------------------------------------------------------------------
# Verification.


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    clauses: tuple[ClauseResult, ...]

    def failing(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.clauses if not c.passed)


def _hat_internal_paths(g: DirectedGraph, ids: dict[str, int]) -> list[list[int]]:
    """All simple (h4, h1)-paths inside one hat's ten vertices."""
    verts = set(ids.values())
    start, goal = ids["h4"], ids["h1"]
    found: list[list[int]] = []
    stack = [(start, [start])]
    while stack:
        u, path = stack.pop()
        for v in g.out_adj[u]:
            if v not in verts or v in path:
                continue
            if v == goal:
                found.append(path + [v])
            else:
                stack.append((v, path + [v]))
    return found


def verify_hat_chain(g: DirectedGraph, bp: GadgetBlueprint) -> VerifyReport:
    """Re-check every structural claim the family is used for."""
    clauses: list[ClauseResult] = []
    ell = bp.ell
    s, t = bp.vertex("s"), bp.vertex("t")

    ok = is_2_strongly_connected(g)
    clauses.append(
        ClauseResult("2-strongly-connected", ok, "" if ok else "a deletion disconnects")
    )

    want_d = 8 * ell + 10
    d, _, _ = diameter_and_pair(g)
    dist_st = distances_from(g, s)[t]
    ok = d == want_d and dist_st == want_d
    clauses.append(
        ClauseResult(
            "diameter",
            ok,
            f"diameter {d}, dist(s,t) {dist_st}, want {want_d}",
        )
    )

    back = distances_from(g, t)[s]
    ok = 0 <= back <= 4 * ell + 7
    clauses.append(
        ClauseResult("return-distance", ok, f"dist(t,s) {back} vs bound {4 * ell + 7}")
    )

    bad_deg: list[str] = []
    for j in range(1, bp.hat_count + 1):
        for name in ("h1", "h4"):
            v = bp.hat_vertex(j, name)
            if len(g.out_adj[v]) != 2 or len(g.in_adj[v]) != 2:
                bad_deg.append(f"hat{j}.{name}")
    clauses.append(
        ClauseResult(
            "junction-degrees",
            not bad_deg,
            "" if not bad_deg else "degree != 2 at " + ", ".join(bad_deg),
        )
    )

    bad_hats: list[str] = []
    for j in range(1, bp.hat_count + 1):
        ids = bp.hat_vertices(j)
        paths = _hat_internal_paths(g, ids)
        want = [ids["h4"], ids["h5"], ids["h1"]]
        if len(paths) != 1 or paths[0] != want:
            bad_hats.append(f"hat{j}")
    clauses.append(
        ClauseResult(
            "hat-internal-path",
            not bad_hats,
            "" if not bad_hats else "non-unique or wrong (h4,h1)-path in " + ", ".join(bad_hats),
        )
    )

    detail = ""
    ok = True
    try:
        w_long = witness_long_path(bp)
        if not w_long.validate(g) or w_long.length != 8 * ell + 14:
            ok, detail = False, f"long witness length {w_long.length}"
        w_h8 = witness_h8_path(bp)
        if not w_h8.validate(g) or w_h8.length != 4 * ell + 15:
            ok, detail = False, f"h8 witness length {w_h8.length}"
        elif w_h8.vertices[-1] != bp.hat_vertex(bp.median_hat, "h8"):
            ok, detail = False, "h8 witness ends at the wrong vertex"
    except (KeyError, AssertionError) as exc:  # pragma: no cover
        ok, detail = False, f"witness construction failed: {exc}"
    clauses.append(ClauseResult("witness-paths", ok, detail))

    return VerifyReport(all(c.passed for c in clauses), tuple(clauses))


# ---------------------------------------------------------------------------
# Witness paths.


def witness_long_path(bp: GadgetBlueprint) -> PathWitness:
    """Length 8*ell + 14 = diameter + 4: two steps on the bottom row, back
    to s, the whole top row, then two steps down the sink's bottom chain."""
    seq = [bp.vertex("s9"), bp.vertex("s10")]
    seq += list(bp.top_row())
    seq += [bp.vertex("t10"), bp.vertex("t9")]
    return PathWitness(tuple(seq), 8 * bp.ell + 10, "hat-chain-long")


def witness_h8_path(bp: GadgetBlueprint) -> PathWitness:
    """Length 4*ell + 15, ending at the median hat's h8.

    Two steps on the opposite row, back to s, along the row that carries the
    median hat's h1, then the fixed 9-arc tail through the next gadget's
    entry vertex.  The median hat sits on the top row for odd ell and on the
    bottom row for even ell, so the prefix mirrors accordingly.
    """
    m = bp.median_hat
    if m % 2 == 1:
        prefix = [bp.vertex("s9"), bp.vertex("s10")]
        row = bp.top_row()
    else:
        prefix = [bp.vertex("s1"), bp.vertex("s2")]
        row = bp.bottom_row()
    h1 = bp.hat_vertex(m, "h1")
    walk = list(row[: row.index(h1) + 1])
    if m < bp.hat_count:
        entry = bp.hat_vertex(m + 1, "h5")
    else:
        # ell = 1: the next gadget is the sink cap; t7 plays the same part.
        entry = bp.vertex("t7")
    tail = [
        bp.hat_vertex(m, "h2"),
        bp.hat_vertex(m, "h3"),
        entry,
        bp.hat_vertex(m, "h10"),
        bp.hat_vertex(m, "h4"),
        bp.hat_vertex(m, "h5"),
        bp.hat_vertex(m, "h6"),
        bp.hat_vertex(m, "h7"),
        bp.hat_vertex(m, "h8"),
    ]
    seq = prefix + walk + tail
    assert len(seq) - 1 == 4 * bp.ell + 15, f"h8 witness length {len(seq) - 1}"
    return PathWitness(tuple(seq), 8 * bp.ell + 10, "hat-chain-h8")


# ---------------------------------------------------------------------------
# Reductions from Hamiltonian path.


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    kind: str
    source_graph: UndirectedGraph
    start_vertex: int | None
    embedding: Mapping[int, int]
    blueprint: GadgetBlueprint | None
    special: Mapping[str, int]
    target_k: int
    claimed_diameter: int


def reduce_undirected_k1(g: UndirectedGraph) -> ReductionInstance:
    """Universal vertex plus two pendant arms of length n - 1 each.

    The result has diameter 2n - 2 (arm end to arm end), and a path of
    length 2n - 1 exists exactly when g has a Hamiltonian path, so deciding
    one step above the diameter decides Hamiltonian path.
    """
    if not isinstance(g, UndirectedGraph):
        raise GraphError("the k=1 reduction takes an undirected graph")
    n = g.n
    if n < 2:
        raise GraphError(f"need at least 2 vertices, got {n}")
    uni = n
    edges: list[tuple[int, int]] = list(g.edges)
    for v in range(n):
        edges.append((v, uni))
    arm_a = [n + 1 + i for i in range(n - 1)]
    arm_b = [n + n + i for i in range(n - 1)]
    for arm in (arm_a, arm_b):
        prev = uni
        for v in arm:
            edges.append((prev, v))
            prev = v
    out = build_undirected(3 * n - 1, sorted(set(edges)))
    special = {"universal": uni, "arm-end-1": arm_a[-1], "arm-end-2": arm_b[-1]}
    return ReductionInstance(
        graph=out,
        kind=KIND_UNDIRECTED_K1,
        source_graph=g,
        start_vertex=None,
        embedding={v: v for v in range(n)},
        blueprint=None,
        special=special,
        target_k=1,
        claimed_diameter=2 * n - 2,
    )


def _admissible_ell(n_h: int, k: int) -> int:
    """The chain size for a Hamiltonian instance of n_h vertices, or raise."""
    ell_min = 17 + (k + 3) // 4
    rem = (k - 5) % 4
    n_min = 4 * ell_min + (k - 5)
    if n_h % 4 != rem or n_h < n_min:
        over = max(n_h, n_min)
        nearest = over + ((rem - over) % 4)
        if nearest < n_min:
            nearest += 4
        raise GraphError(
            f"|V(H)| = {n_h} is not admissible for k = {k}: need "
            f"|V(H)| = 4*ell + {k - 5} with ell >= {ell_min} "
            f"(nearest admissible size is {nearest})"
        )
    return (n_h - (k - 5)) // 4


def reduce_2sc_lpad(h: UndirectedGraph, w: int, k: int) -> ReductionInstance:
    """Hamiltonian path from w in a 2-connected graph, rewritten as a
    diameter + k question on a 2-strongly-connected digraph.

    The instance is the hat chain plus a symmetrized copy of h, tied
    together by four connector arcs on the median hat's h6/h8 and two
    vertices of h.  Sizes are rigid: |V(h)| must be 4*ell + (k - 5) with
    ell at least 17 + ceil(k/4), or the chain is too short to dominate the
    diameter.
    """
    if k < 5:
        raise ValueError(f"this reduction needs k >= 5, got {k}")
    if not isinstance(h, UndirectedGraph):
        raise GraphError("the large-k reduction takes an undirected graph")
    if not (0 <= w < h.n):
        raise GraphError(f"start vertex {w} out of range for n = {h.n}")
    if not is_2_connected_undirected(h):
        raise GraphError("the source graph must be 2-connected")
    ell = _admissible_ell(h.n, k)
    chain, bp = build_hat_chain(ell)
    base = chain.n
    embedding = {v: base + v for v in range(h.n)}
    arcs: list[tuple[int, int]] = list(chain.arcs)
    for u, v in h.edges:
        arcs.append((embedding[u], embedding[v]))
        arcs.append((embedding[v], embedding[u]))
    c1 = embedding[min(v for v in range(h.n) if v != w)]
    c2 = embedding[w]
    c3 = bp.hat_vertex(bp.median_hat, "h6")
    c4 = bp.hat_vertex(bp.median_hat, "h8")
    arcs += [(c3, c1), (c4, c2), (c1, c4), (c2, c3)]
    out = build_digraph(base + h.n, sorted(arcs))
    return ReductionInstance(
        graph=out,
        kind=KIND_DIRECTED_2SC,
        source_graph=h,
        start_vertex=w,
        embedding=embedding,
        blueprint=bp,
        special={"c1": c1, "c2": c2, "c3": c3, "c4": c4},
        target_k=k,
        claimed_diameter=8 * ell + 10,
    )


def reduce_2sc_lpad_family(h: UndirectedGraph, k: int) -> Iterator[ReductionInstance]:
    """One reduced instance per start vertex; the Hamiltonian-path question
    for h is the OR over the family."""
    for w in range(h.n):
        yield reduce_2sc_lpad(h, w, k)


def lift_ham_witness(
    r: ReductionInstance, ham: Sequence[int] | PathWitness
) -> PathWitness:
    """Turn a Hamiltonian path of the source graph (starting at w) into a
    diameter + k path of the reduced instance."""
    if r.kind != KIND_DIRECTED_2SC:
        raise ValueError(f"witness lifting applies to {KIND_DIRECTED_2SC} instances")
    vertices = tuple(ham.vertices) if isinstance(ham, PathWitness) else tuple(ham)
    h = r.source_graph
    if len(vertices) != h.n or set(vertices) != set(range(h.n)):
        raise ValueError("input path does not cover the source graph exactly once")
    if vertices[0] != r.start_vertex:
        raise ValueError(
            f"input path starts at {vertices[0]}, the instance uses w = {r.start_vertex}"
        )
    for a, b in zip(vertices, vertices[1:]):
        if not h.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge of the source graph")
    assert r.blueprint is not None
    head = witness_h8_path(r.blueprint)
    seq = list(head.vertices) + [r.embedding[v] for v in vertices]
    lifted = PathWitness(tuple(seq), r.claimed_diameter, "lifted-hamiltonian")
    assert lifted.validate(r.graph), "lifted path failed validation"
    assert lifted.length == r.claimed_diameter + r.target_k
    return lifted
