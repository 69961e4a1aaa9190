"""The headline decomposers: max-degree-4, claw-free, greedy, dispatch."""

import random
import time

import pytest

import cyclesmith.decomposer as decomposer
from conftest import (
    all_labeled_graphs,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from cyclesmith.decomposer import (
    CycleSequence,
    decompose_auto,
    decompose_clawfree,
    decompose_greedy,
    decompose_maxdeg4,
)
from cyclesmith.errors import DegreeTooHigh, NotClawFree
from cyclesmith.generators import random_regular
from cyclesmith.graph import Graph, find_claw, is_connected
from cyclesmith.verify import PartKind, verify_decomposition

CE = {PartKind.CYCLE, PartKind.SINGLE_EDGE}
RE = {PartKind.TWO_REGULAR, PartKind.SINGLE_EDGE}


# -- maxdeg4 -------------------------------------------------------------------

def test_maxdeg4_path():
    d = decompose_maxdeg4(path_graph(4))
    assert d.size == 3
    assert all(p.kind is PartKind.SINGLE_EDGE for p in d.parts)


def test_maxdeg4_c5():
    d = decompose_maxdeg4(cycle_graph(5))
    assert d.size == 1


def test_maxdeg4_k5():
    g = complete_graph(5)
    d = decompose_maxdeg4(g)
    assert verify_decomposition(g, d, CE).ok
    assert d.size <= 4


def test_maxdeg4_bowtie():
    g = bowtie_graph()
    d = decompose_maxdeg4(g)
    assert d.size == 2
    assert all(p.kind is PartKind.CYCLE for p in d.parts)


def test_maxdeg4_rejects_high_degree():
    with pytest.raises(DegreeTooHigh):
        decompose_maxdeg4(star_graph(5))


def test_maxdeg4_sweep_n6_with_invariants():
    decomposer.CHECK_SEQUENCE_INVARIANTS = True
    try:
        for n in range(1, 7):
            for g in all_labeled_graphs(n):
                if g.max_degree() > 4:
                    continue
                d = decompose_maxdeg4(g)
                assert verify_decomposition(g, d, CE).ok
                if is_connected(g) and g.n >= 2:
                    assert d.size <= g.n - 1
    finally:
        decomposer.CHECK_SEQUENCE_INVARIANTS = False


def test_maxdeg4_random_4regular_n60():
    for seed in range(3):
        g = random_regular(60, 4, seed=seed)
        d = decompose_maxdeg4(g)
        assert verify_decomposition(g, d, CE).ok
        assert d.size <= g.n - 1


def test_cycle_sequence_invariant_helper():
    g = bowtie_graph()
    tri1 = frozenset({g.edge_id(0, 1), g.edge_id(0, 2), g.edge_id(1, 2)})
    tri2 = frozenset({g.edge_id(0, 3), g.edge_id(0, 4), g.edge_id(3, 4)})
    ok = CycleSequence(g, [(tri1, frozenset({0, 1, 2})), (tri2, frozenset({0, 3, 4}))])
    assert ok.invariant_ok()
    bad = CycleSequence(g, [(tri1, frozenset({0, 1, 2})), (tri1, frozenset({0, 1, 2}))])
    assert not bad.invariant_ok()
    far = CycleSequence(g, [(tri1, frozenset({0, 1, 2})), (tri2, frozenset({7, 8, 9}))])
    assert not far.invariant_ok()


# -- clawfree -------------------------------------------------------------------

def test_clawfree_c6():
    d = decompose_clawfree(cycle_graph(6))
    assert d.size == 1


def test_clawfree_k4():
    g = complete_graph(4)
    d = decompose_clawfree(g)
    assert d.size == 3 == g.n - 1
    kinds = sorted(p.kind.value for p in d.parts)
    assert kinds == ["SingleEdge", "SingleEdge", "TwoRegular"]
    assert verify_decomposition(g, d, RE).ok


def test_clawfree_k5_even_route():
    d = decompose_clawfree(complete_graph(5))
    assert d.size == 2
    assert all(p.kind is PartKind.TWO_REGULAR for p in d.parts)


def test_clawfree_rejects_claw():
    with pytest.raises(NotClawFree) as exc:
        decompose_clawfree(star_graph(3))
    assert exc.value.center == 0


def test_clawfree_fallback_above_linkage_threshold():
    from cyclesmith.limits import Limits

    g = complete_graph(4)
    d = decompose_clawfree(g, Limits(linkage_exact_max_t=2))
    assert not d.meta["bound_guaranteed"]
    assert verify_decomposition(g, d, RE).ok
    assert d.size <= g.n - 1  # checked, not guaranteed


def test_clawfree_sweep_n6():
    for n in range(1, 7):
        for g in all_labeled_graphs(n):
            if find_claw(g) is not None:
                continue
            d = decompose_clawfree(g)
            assert verify_decomposition(g, d, RE).ok
            assert d.meta["bound_guaranteed"]
            if is_connected(g) and g.n >= 2:
                assert d.size <= g.n - 1


# -- greedy ----------------------------------------------------------------------

def test_greedy_c7():
    d = decompose_greedy(cycle_graph(7))
    assert d.size == 1


def test_greedy_tree():
    d = decompose_greedy(path_graph(5))
    assert d.size == 4
    assert all(p.kind is PartKind.SINGLE_EDGE for p in d.parts)


def test_greedy_petersen():
    g = petersen_graph()
    d = decompose_greedy(g)
    assert verify_decomposition(g, d, CE).ok
    assert d.size <= 9
    # exact longest-cycle mode peels a 9-cycle first
    assert max(len(p.edges) for p in d.parts) == 9


def test_greedy_heuristic_mode():
    from cyclesmith.limits import Limits

    g = petersen_graph()
    d = decompose_greedy(g, Limits(greedy_exact_max_n=4))
    assert verify_decomposition(g, d, CE).ok
    assert d.size <= g.m


def test_greedy_sweep_n5():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            d = decompose_greedy(g)
            assert verify_decomposition(g, d, CE).ok
            assert d.size <= max(g.m, 0)
            cyc = sum(1 for p in d.parts if p.kind is PartKind.CYCLE)
            singles = d.size - cyc
            assert singles + sum(len(p.edges) for p in d.parts if p.kind is PartKind.CYCLE) == g.m


# -- auto dispatch ----------------------------------------------------------------

def test_auto_k5_routes_even():
    d = decompose_auto(complete_graph(5))
    assert d.meta["method"] == "even2reg"
    assert d.size == 2


def test_auto_petersen_routes_maxdeg4():
    d = decompose_auto(petersen_graph())
    assert d.meta["method"] == "maxdeg4"


def test_auto_star_routes_greedy():
    d = decompose_auto(star_graph(5))
    assert d.meta["method"] == "greedy"
    assert d.size == 5


def test_auto_k6_routes_clawfree():
    d = decompose_auto(complete_graph(6))  # odd-regular, degree 5, claw-free
    assert d.meta["method"] == "clawfree"
    g = complete_graph(6)
    assert verify_decomposition(g, d, RE).ok
    assert d.size <= 5
