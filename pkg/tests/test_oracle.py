"""Exact oracle values on pinned instances plus sanity relations."""

import random

import pytest

from conftest import (
    all_labeled_graphs,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from cyclesmith.errors import LimitExceeded
from cyclesmith.limits import Limits
from cyclesmith.oracle import exact_ce, exact_gce, exact_re
from cyclesmith.verify import PartKind, verify_cover, verify_decomposition

CE = {PartKind.CYCLE, PartKind.SINGLE_EDGE}
RE = {PartKind.TWO_REGULAR, PartKind.SINGLE_EDGE}


def test_ce_pinned():
    assert exact_ce(complete_graph(3)).value == 1
    assert exact_ce(path_graph(4)).value == 3
    assert exact_ce(petersen_graph()).value == 7


def test_re_pinned():
    assert exact_re(complete_graph(5)).value == 2
    assert exact_re(complete_graph(4)).value == 3
    assert exact_re(star_graph(3)).value == 3


def test_gce_pinned():
    assert exact_gce(cycle_graph(5)).value == 1
    assert exact_gce(path_graph(4)).value == 3
    assert exact_gce(complete_graph(4)).value == 2


def test_gce_petersen_cover_fixture():
    """gce(Petersen) = 3.  Lower bound by hand: two cycles covering all 15
    edges would need to share exactly one edge at every degree-3 vertex (a
    cycle covers 0 or 2 edges at a vertex), so the shared edges would form
    a perfect matching of size 5 and |C1|+|C2| = 15+5 = 20 > 2*9, which is
    impossible; 3 parts are achieved by two 9-cycles plus one edge."""
    g = petersen_graph()
    res = exact_gce(g)
    assert res.value == 3
    assert verify_cover(g, res.witness, CE).ok
    sizes = sorted(len(p.edges) for p in res.witness.parts)
    assert sizes == [1, 9, 9]


def test_witnesses_verify():
    g = petersen_graph()
    res = exact_ce(g)
    assert verify_decomposition(g, res.witness, CE).ok
    assert res.witness.size == res.value
    res = exact_re(complete_graph(5))
    assert verify_decomposition(complete_graph(5), res.witness, RE).ok
    res = exact_gce(bowtie_graph())
    assert verify_cover(bowtie_graph(), res.witness, CE).ok
    assert res.value == 2


def test_limit_exceeded_on_large():
    g = complete_graph(7)  # 21 edges > default 20
    with pytest.raises(LimitExceeded):
        exact_ce(g)
    assert exact_ce(g, Limits(oracle_max_edges=21)).value <= 6


def test_cycle_cap():
    with pytest.raises(LimitExceeded):
        exact_ce(complete_graph(6), Limits(oracle_max_cycles=10))


def test_metric_order_sweep_n5():
    """gce <= ce and re <= ce on every instance (covers are weaker,
    2-regular parts subsume cycles)."""
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            ce = exact_ce(g).value
            re = exact_re(g).value
            gce = exact_gce(g).value
            assert gce <= ce
            assert re <= ce
            assert ce <= g.m or g.m == 0 and ce == 0


def test_metric_order_random_n7():
    import itertools

    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(4, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        from cyclesmith.graph import Graph

        g = Graph(n, edges)
        if g.m > 20:
            continue
        ce = exact_ce(g)
        re = exact_re(g)
        gce = exact_gce(g)
        assert gce.value <= ce.value and re.value <= ce.value
        assert verify_decomposition(g, ce.witness, CE).ok
        assert verify_decomposition(g, re.witness, RE).ok
        assert verify_cover(g, gce.witness, CE).ok
