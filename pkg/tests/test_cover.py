"""Covers by cycles and edges; Fan-style even covers."""

import pytest

from conftest import (
    all_labeled_graphs,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from cyclesmith.cover import cover_cycles_edges, even_cycle_cover
from cyclesmith.errors import NotEven
from cyclesmith.graph import Graph, is_connected
from cyclesmith.limits import Limits
from cyclesmith.verify import PartKind, verify_cover

CE = {PartKind.CYCLE, PartKind.SINGLE_EDGE}


def test_cover_c5():
    c = cover_cycles_edges(cycle_graph(5))
    assert c.size == 1


def test_cover_k4_two_cycles():
    g = complete_graph(4)
    c = cover_cycles_edges(g)
    assert c.size == 2 == g.n - 2
    assert verify_cover(g, c, CE).ok


def test_cover_tree_single_edges():
    c = cover_cycles_edges(path_graph(4))
    assert c.size == 3
    assert all(p.kind is PartKind.SINGLE_EDGE for p in c.parts)


def test_cover_forest_components():
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    c = cover_cycles_edges(g)
    assert c.size == 3 == g.n - 3


def test_cover_petersen():
    g = petersen_graph()
    c = cover_cycles_edges(g)
    assert verify_cover(g, c, CE).ok
    assert c.size <= g.n - 2


def test_cover_trace_identity():
    # two triangles joined by a path: cut splits must add up
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
    c = cover_cycles_edges(g)
    assert verify_cover(g, c, CE).ok
    assert c.size <= g.n - 2
    for split in c.meta["trace"]:
        assert split["c1"] + split["c2"] >= 1
    assert c.meta["trace"]


def test_cover_sweep_n6():
    for n in range(2, 7):
        for g in all_labeled_graphs(n):
            c = cover_cycles_edges(g)
            assert verify_cover(g, c, CE).ok
            if is_connected(g) and g.m >= g.n:
                assert c.size <= g.n - 2, f"{g.edges}"
                assert c.meta["bound_guaranteed"]


def test_even_cover_c6():
    c = even_cycle_cover(cycle_graph(6))
    assert c.size == 1


def test_even_cover_k5():
    c = even_cycle_cover(complete_graph(5))
    assert c.size == 2
    assert c.meta["minimum"]


def test_even_cover_bowtie():
    g = bowtie_graph()
    c = even_cycle_cover(g)
    assert c.size == 2
    assert verify_cover(g, c, {PartKind.CYCLE}).ok


def test_even_cover_rejects_odd():
    with pytest.raises(NotEven):
        even_cycle_cover(complete_graph(4))


def test_even_cover_fallback_above_threshold():
    g = complete_graph(7)  # 21 even edges, above the default 16
    c = even_cycle_cover(g)
    assert verify_cover(g, c, {PartKind.CYCLE}).ok
    assert not c.meta["bound_guaranteed"]
    c2 = even_cycle_cover(g, Limits(cover_exact_max_edges=21))
    assert c2.meta["bound_guaranteed"]
    assert c2.size <= (g.n - 1) // 2


def test_cover_k7_with_raised_limits():
    g = complete_graph(7)
    c = cover_cycles_edges(g, Limits(cover_exact_max_edges=21))
    assert verify_cover(g, c, CE).ok
    assert c.size <= g.n - 2
    assert c.meta["bound_guaranteed"]
