"""Certificate verification against a naive re-implementation."""

import random

from conftest import all_labeled_graphs, complete_graph, cycle_graph
from cyclesmith.graph import Graph
from cyclesmith.verify import (
    Cover,
    Decomposition,
    Part,
    PartKind,
    certificate_from_json,
    certificate_to_json,
    verify_cover,
    verify_decomposition,
)

CE_KINDS = {PartKind.CYCLE, PartKind.SINGLE_EDGE}
RE_KINDS = {PartKind.TWO_REGULAR, PartKind.SINGLE_EDGE}


def naive_decomposition_ok(g, parts):
    ids = sorted(i for p in parts for i in p.edges)
    return ids == list(range(g.m))


def test_k3_cycle_ok():
    g = complete_graph(3)
    d = Decomposition([Part(PartKind.CYCLE, frozenset({0, 1, 2}))])
    assert verify_decomposition(g, d, CE_KINDS).ok


def test_k3_duplicate_edge_flagged():
    g = complete_graph(3)
    d = Decomposition([
        Part(PartKind.CYCLE, frozenset({0, 1, 2})),
        Part(PartKind.SINGLE_EDGE, frozenset({0})),
    ])
    verdict = verify_decomposition(g, d, CE_KINDS)
    assert not verdict.ok
    assert any(v.rule == "disjoint" for v in verdict.violations)


def test_k4_c4_plus_matching():
    g = complete_graph(4)
    c4 = frozenset({g.edge_id(0, 1), g.edge_id(1, 2), g.edge_id(2, 3), g.edge_id(0, 3)})
    d = Decomposition([
        Part(PartKind.TWO_REGULAR, c4),
        Part(PartKind.SINGLE_EDGE, frozenset({g.edge_id(0, 2)})),
        Part(PartKind.SINGLE_EDGE, frozenset({g.edge_id(1, 3)})),
    ])
    assert verify_decomposition(g, d, RE_KINDS).ok


def test_kind_not_allowed():
    g = complete_graph(3)
    d = Decomposition([Part(PartKind.TWO_REGULAR, frozenset({0, 1, 2}))])
    verdict = verify_decomposition(g, d, CE_KINDS)
    assert not verdict.ok
    assert any(v.rule == "kind-allowed" for v in verdict.violations)


def test_cycle_must_be_single_cycle():
    # two disjoint triangles are TwoRegular but not a Cycle
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    both = frozenset(range(6))
    bad = Decomposition([Part(PartKind.CYCLE, both)])
    assert not verify_decomposition(g, bad).ok
    good = Decomposition([Part(PartKind.TWO_REGULAR, both)])
    assert verify_decomposition(g, good, RE_KINDS).ok


def test_even_kind():
    g = complete_graph(5)  # K5 is even
    d = Decomposition([Part(PartKind.EVEN, frozenset(range(g.m)))])
    assert verify_decomposition(g, d, {PartKind.EVEN}).ok
    g2 = complete_graph(4)
    d2 = Decomposition([Part(PartKind.EVEN, frozenset(range(g2.m)))])
    assert not verify_decomposition(g2, d2, {PartKind.EVEN}).ok


def test_cover_c5():
    g = cycle_graph(5)
    c = Cover([Part(PartKind.CYCLE, frozenset(range(5)))])
    assert verify_cover(g, c, {PartKind.CYCLE}).ok


def test_cover_k4_two_hamiltonians():
    g = complete_graph(4)
    h1 = frozenset({g.edge_id(0, 1), g.edge_id(1, 2), g.edge_id(2, 3), g.edge_id(0, 3)})
    h2 = frozenset({g.edge_id(0, 2), g.edge_id(2, 1), g.edge_id(1, 3), g.edge_id(0, 3)})
    c = Cover([Part(PartKind.CYCLE, h1), Part(PartKind.CYCLE, h2)])
    assert verify_cover(g, c, {PartKind.CYCLE}).ok


def test_cover_missing_edges():
    g = complete_graph(4)
    h1 = frozenset({g.edge_id(0, 1), g.edge_id(1, 2), g.edge_id(2, 3), g.edge_id(0, 3)})
    c = Cover([Part(PartKind.CYCLE, h1)])
    verdict = verify_cover(g, c)
    assert not verdict.ok
    assert sum(1 for v in verdict.violations if v.rule == "exhaustive") == 2


def test_verdict_iff_violations():
    g = complete_graph(3)
    for parts in ([], [Part(PartKind.CYCLE, frozenset({0, 1, 2}))]):
        verdict = verify_decomposition(g, Decomposition(parts))
        assert verdict.ok == (not verdict.violations)


def test_random_partitions_against_naive():
    rng = random.Random(99)
    for n in range(2, 7):
        for g in (complete_graph(n), cycle_graph(max(n, 3))):
            for _ in range(20):
                ids = list(range(g.m))
                rng.shuffle(ids)
                parts = []
                i = 0
                while i < len(ids):
                    j = min(len(ids), i + rng.randint(1, 3))
                    parts.append(Part(PartKind.EVEN, frozenset(ids[i:j])))
                    i = j
                # naive check agrees on the partition axiom (ignore kinds)
                got = verify_decomposition(g, Decomposition(parts), {PartKind.EVEN})
                partition_ok = not any(
                    v.rule in ("disjoint", "exhaustive") for v in got.violations
                )
                assert partition_ok == naive_decomposition_ok(g, parts)


def test_certificate_json_roundtrip():
    g = complete_graph(4)
    d = Decomposition(
        [
            Part(PartKind.TWO_REGULAR, frozenset({0, 2, 4, 5})),
            Part(PartKind.SINGLE_EDGE, frozenset({1})),
            Part(PartKind.SINGLE_EDGE, frozenset({3})),
        ],
        {"method": "demo"},
    )
    obj = certificate_to_json(g, d)
    assert obj["mode"] == "decomposition"
    assert obj["method"] == "demo"
    g2, d2 = certificate_from_json(obj)
    assert g2 == g
    assert [p.edges for p in d2.parts] == [p.edges for p in d.parts]
    assert d2.meta["method"] == "demo"


def test_certificate_json_edge_list_graph():
    g = Graph(63, [(0, 1), (1, 2), (0, 2)])  # too big for graph6
    c = Cover([Part(PartKind.CYCLE, frozenset({0, 1, 2}))])
    obj = certificate_to_json(g, c)
    assert "\n" in obj["graph"]
    g2, c2 = certificate_from_json(obj)
    assert g2 == g and isinstance(c2, Cover)
