"""Plain-text file formats: graphs, blueprints, witness documents.

Graph files are line-based and 1-indexed:

    c  anything after "c " is a comment
    p dg <n> <m>     directed header (or "p ug" for undirected)
    a <u> <v>        one arc per line ("e <u> <v>" for edges)

Writers emit arcs in sorted order with no timestamps or environment
details, so the same graph always serializes to the same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .gadgets import GadgetBlueprint, ReductionInstance
from .graphs import DirectedGraph, Graph, UndirectedGraph, build_digraph, build_undirected


class FileFormatError(ValueError):
    """Raised on malformed input; the message names the offending line."""


def loads_graph(text: str) -> Graph:
    kind: str | None = None
    n = m = 0
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if kind is not None:
                raise FileFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("dg", "ug"):
                raise FileFormatError(
                    f"line {lineno}: expected 'p dg <n> <m>' or 'p ug <n> <m>'"
                )
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FileFormatError(f"line {lineno}: n and m must be integers") from None
            if n < 0 or m < 0:
                raise FileFormatError(f"line {lineno}: n and m must be nonnegative")
            kind = parts[1]
        elif parts[0] in ("a", "e"):
            if kind is None:
                raise FileFormatError(f"line {lineno}: arc before the problem line")
            want = "a" if kind == "dg" else "e"
            if parts[0] != want:
                raise FileFormatError(
                    f"line {lineno}: '{parts[0]}' lines do not belong in a '{kind}' file"
                )
            if len(parts) != 3:
                raise FileFormatError(f"line {lineno}: expected '{want} <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FileFormatError(f"line {lineno}: endpoints must be integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FileFormatError(
                    f"line {lineno}: endpoint out of range 1..{n}"
                )
            pairs.append((u - 1, v - 1))
        else:
            raise FileFormatError(f"line {lineno}: unrecognized line {parts[0]!r}")
    if kind is None:
        raise FileFormatError("line 1: missing problem line")
    if len(pairs) != m:
        raise FileFormatError(
            f"line 1: header claims m = {m} but the file has {len(pairs)} arc lines"
        )
    try:
        if kind == "dg":
            return build_digraph(n, pairs)
        return build_undirected(n, pairs)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None


def load_graph(path: str | Path) -> Graph:
    return loads_graph(Path(path).read_text())


def dumps_graph(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    if isinstance(g, DirectedGraph):
        lines.append(f"p dg {g.n} {g.m}")
        lines += [f"a {u + 1} {v + 1}" for u, v in sorted(g.arcs)]
    else:
        lines.append(f"p ug {g.n} {g.m}")
        lines += [f"e {u + 1} {v + 1}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str | Path, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(dumps_graph(g, comments))


# ---------------------------------------------------------------------------
# Blueprint documents: role names to 1-indexed vertex ids.


def dumps_blueprint(bp: GadgetBlueprint) -> str:
    lines = [f"p hatchain {bp.ell}"]
    lines += [f"r {name} {vid + 1}" for name, vid in sorted(bp.roles.items())]
    return "\n".join(lines) + "\n"


def write_blueprint(bp: GadgetBlueprint, path: str | Path) -> None:
    Path(path).write_text(dumps_blueprint(bp))


def loads_blueprint(text: str) -> GadgetBlueprint:
    ell: int | None = None
    roles: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 3 or parts[1] != "hatchain":
                raise FileFormatError(f"line {lineno}: expected 'p hatchain <ell>'")
            ell = int(parts[2])
        elif parts[0] == "r":
            if len(parts) != 3:
                raise FileFormatError(f"line {lineno}: expected 'r <role> <vertex>'")
            roles[parts[1]] = int(parts[2]) - 1
        else:
            raise FileFormatError(f"line {lineno}: unrecognized line {parts[0]!r}")
    if ell is None:
        raise FileFormatError("line 1: missing problem line")
    hat_count = 2 * ell - 1
    orientations = tuple("top" if j % 2 == 1 else "bottom" for j in range(1, hat_count + 1))
    return GadgetBlueprint(ell=ell, roles=roles, orientations=orientations)


def load_blueprint(path: str | Path) -> GadgetBlueprint:
    return loads_blueprint(Path(path).read_text())


def dumps_reduction(inst: ReductionInstance) -> str:
    """Companion document for a reduced instance: target k, claimed
    diameter, start vertex, special roles, and the source-vertex embedding.
    All vertex ids 1-indexed, all sections sorted, byte-deterministic."""
    lines = [f"p reduction {inst.kind} {inst.graph.n}"]
    lines.append(f"k {inst.target_k}")
    lines.append(f"d {inst.claimed_diameter}")
    if inst.start_vertex is not None:
        lines.append(f"w {inst.start_vertex + 1}")
    for name in sorted(inst.special):
        lines.append(f"r {name} {inst.special[name] + 1}")
    for src in sorted(inst.embedding):
        lines.append(f"m {src + 1} {inst.embedding[src] + 1}")
    return "\n".join(lines) + "\n"


def write_reduction(inst: ReductionInstance, path: str | Path) -> None:
    Path(path).write_text(dumps_reduction(inst))


# ---------------------------------------------------------------------------
# Witness documents.


@dataclass(frozen=True)
class WitnessDocument:
    """Machine-readable answer: verdict, measured length, and the path."""

    found: bool
    length: int | None
    baseline_kind: str  # "dist" | "diameter"
    baseline_value: int
    path: tuple[int, ...]  # 0-indexed internally; rendered 1-indexed
    stage: str
    meta: str  # "exact" | "randomized" | "inconclusive"
    delta: float | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def render_witness(doc: WitnessDocument) -> str:
    lines = [f"found {'yes' if doc.found else 'no'}"]
    lines.append(f"baseline {doc.baseline_kind} {doc.baseline_value}")
    if doc.length is not None:
        lines.append(f"length {doc.length}")
    if doc.found and doc.path:
        lines.append("path " + " ".join(str(v + 1) for v in doc.path))
    lines.append(f"stage {doc.stage}")
    if doc.meta == "randomized":
        lines.append(f"meta randomized {doc.delta}")
    else:
        lines.append(f"meta {doc.meta}")
    for note in doc.notes:
        lines.append(f"c {note}")
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> WitnessDocument:
    found = False
    length: int | None = None
    baseline_kind, baseline_value = "dist", 0
    path: tuple[int, ...] = ()
    stage = ""
    meta = "exact"
    delta: float | None = None
    notes: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.strip().split()
        if not parts:
            continue
        key = parts[0]
        if key == "found":
            found = parts[1] == "yes"
        elif key == "length":
            length = int(parts[1])
        elif key == "baseline":
            baseline_kind, baseline_value = parts[1], int(parts[2])
        elif key == "path":
            path = tuple(int(v) - 1 for v in parts[1:])
        elif key == "stage":
            stage = parts[1]
        elif key == "meta":
            meta = parts[1]
            if meta == "randomized" and len(parts) > 2:
                delta = float(parts[2])
        elif key == "c":
            notes.append(raw.strip()[2:])
        else:
            raise FileFormatError(f"line {lineno}: unrecognized line {key!r}")
    return WitnessDocument(
        found=found,
        length=length,
        baseline_kind=baseline_kind,
        baseline_value=baseline_value,
        path=path,
        stage=stage,
        meta=meta,
        delta=delta,
        notes=tuple(notes),
    )
