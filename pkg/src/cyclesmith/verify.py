"""Independent validation of decomposition and cover certificates.

Verification never trusts producer metadata: every kind invariant is
recomputed from the edge sets alone, so these checks double as the test
oracle for the whole package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import MalformedEdgeList, MalformedGraph6
from .graph import Graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6


class PartKind(enum.Enum):
    CYCLE = "Cycle"
    SINGLE_EDGE = "SingleEdge"
    TWO_REGULAR = "TwoRegular"
    EVEN = "Even"


@dataclass(frozen=True)
class Part:
    """One typed piece of a certificate.

    Kind invariants (checked by the verifier, not assumed):
      Cycle       edges induce a single cycle (connected, all degrees 2)
      SingleEdge  exactly one edge
      TwoRegular  all induced degrees 2 (disjoint cycles allowed)
      Even        all induced degrees even
    """

    kind: PartKind
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))


@dataclass
class Decomposition:
    """Partition of a graph's edge set into typed parts."""

    parts: list
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.parts)


@dataclass
class Cover:
    """Family of typed edge subsets whose union is the edge set."""

    parts: list
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Violation:
    part_index: int  # -1 for certificate-level problems
    rule: str
    detail: str


@dataclass
class Verdict:
    ok: bool
    violations: list

    def __bool__(self) -> bool:
        return self.ok


ALL_KINDS = frozenset(PartKind)


def _check_part(g: Graph, idx: int, part: Part, allowed, out: list) -> None:
    if part.kind not in allowed:
        out.append(Violation(idx, "kind-allowed",
                             f"kind {part.kind.value} not in allowed set"))
    edges = part.edges
    if not edges:
        out.append(Violation(idx, "nonempty", "part has no edges"))
        return
    for eid in edges:
        if not (0 <= eid < g.m):
            out.append(Violation(idx, "edge-range", f"edge id {eid} out of range"))
            return
    if part.kind is PartKind.SINGLE_EDGE:
        if len(edges) != 1:
            out.append(Violation(idx, "single-edge", f"{len(edges)} edges in a SingleEdge part"))
        return
    deg = {}
    for eid in edges:
        u, v = g.edges[eid]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if part.kind is PartKind.EVEN:
        bad = [v for v, d in deg.items() if d % 2]
        if bad:
            out.append(Violation(idx, "even-degrees", f"odd degree at vertices {sorted(bad)}"))
        return
    bad = [v for v, d in deg.items() if d != 2]
    if bad:
        out.append(Violation(idx, "degree-two", f"degree != 2 at vertices {sorted(bad)}"))
        return
    if part.kind is PartKind.CYCLE and not _connected_on(g, edges, deg):
        out.append(Violation(idx, "single-cycle", "edge set splits into several cycles"))


def _connected_on(g: Graph, edges, deg) -> bool:
    nbr = {}
    for eid in edges:
        u, v = g.edges[eid]
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in nbr[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


def verify_decomposition(g: Graph, d: Decomposition, allowed=ALL_KINDS) -> Verdict:
    """ok iff parts are pairwise disjoint, exhaustive, each satisfies its
    kind invariant and each kind is allowed."""
    violations = []
    counts = [0] * g.m
    for idx, part in enumerate(d.parts):
        _check_part(g, idx, part, allowed, violations)
        for eid in part.edges:
            if 0 <= eid < g.m:
                counts[eid] += 1
    for eid, c in enumerate(counts):
        if c > 1:
            u, v = g.edges[eid]
            violations.append(Violation(-1, "disjoint", f"edge {u}-{v} used {c} times"))
        elif c == 0:
            u, v = g.edges[eid]
            violations.append(Violation(-1, "exhaustive", f"edge {u}-{v} missing"))
    return Verdict(not violations, violations)


def verify_cover(g: Graph, c: Cover, allowed=ALL_KINDS) -> Verdict:
    """Like verify_decomposition with exhaustiveness only (overlap allowed)."""
    violations = []
    covered = set()
    for idx, part in enumerate(c.parts):
        _check_part(g, idx, part, allowed, violations)
        covered.update(part.edges)
    for eid in range(g.m):
        if eid not in covered:
            u, v = g.edges[eid]
            violations.append(Violation(-1, "exhaustive", f"edge {u}-{v} uncovered"))
    return Verdict(not violations, violations)


# -- certificate JSON ---------------------------------------------------------


def certificate_to_json(g: Graph, cert) -> dict:
    """Shared schema: {"graph": ..., "mode": ..., "parts": [{kind, edges}]}
    plus any metadata keys the producer recorded."""
    mode = "decomposition" if isinstance(cert, Decomposition) else "cover"
    try:
        graph_repr = write_graph6(g)
    except Exception:
        graph_repr = write_edge_list(g)
    obj = {
        "graph": graph_repr,
        "mode": mode,
        "parts": [
            {
                "kind": p.kind.value,
                "edges": [list(g.edges[eid]) for eid in sorted(p.edges)],
            }
            for p in cert.parts
        ],
    }
    for key, val in cert.meta.items():
        obj[key] = val
    return obj


def certificate_from_json(obj: dict):
    """Returns (graph, certificate); certificate type follows "mode"."""
    if not isinstance(obj, dict):
        raise ValueError("certificate must be a JSON object")
    g = graph_from_text(obj["graph"])
    mode = obj.get("mode", "decomposition")
    if mode not in ("decomposition", "cover"):
        raise ValueError(f"bad mode {mode!r}")
    parts = []
    for entry in obj["parts"]:
        kind = PartKind(entry["kind"])
        eids = frozenset(g.edge_id(u, v) for u, v in entry["edges"])
        if len(eids) != len(entry["edges"]):
            raise ValueError("duplicate edge inside one part")
        parts.append(Part(kind, eids))
    meta = {k: v for k, v in obj.items() if k not in ("graph", "mode", "parts")}
    if mode == "decomposition":
        return g, Decomposition(parts, meta)
    return g, Cover(parts, meta)


def graph_from_text(text: str) -> Graph:
    """Accept either a graph6 line or an edge-list document."""
    stripped = text.strip()
    if "\n" in stripped or " " in stripped:
        return parse_edge_list(text)
    try:
        return parse_graph6(stripped)
    except MalformedGraph6:
        try:
            return parse_edge_list(text)
        except MalformedEdgeList:
            raise
