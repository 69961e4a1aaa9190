"""Even-to-2-regular decomposition, 2-factorization, girth bound."""

from fractions import Fraction

import pytest

from conftest import (
    all_labeled_graphs,
    bowtie_graph,
    circulant_graph,
    complete_graph,
    cycle_graph,
)
from cyclesmith.errors import NotEven, NotRegularEven
from cyclesmith.graph import Graph, connected_components, girth
from cyclesmith.regular_decomp import (
    even_to_two_regular,
    girth_bound_decompose,
    petersen_two_factorization,
)
from cyclesmith.verify import PartKind, verify_decomposition


def test_c6_single_part():
    g = cycle_graph(6)
    d = even_to_two_regular(g)
    assert d.size == 1
    assert d.parts[0].edges == frozenset(range(6))


def test_k5_two_five_cycles():
    g = complete_graph(5)
    d = even_to_two_regular(g)
    assert d.size == 2
    assert verify_decomposition(g, d, {PartKind.TWO_REGULAR}).ok
    for part in d.parts:
        # each part here is a single 5-cycle
        verts = {x for eid in part.edges for x in g.edges[eid]}
        assert len(part.edges) == 5 and len(verts) == 5


def test_bowtie_two_triangles():
    g = bowtie_graph()
    d = even_to_two_regular(g)
    tri1 = frozenset({g.edge_id(0, 1), g.edge_id(0, 2), g.edge_id(1, 2)})
    tri2 = frozenset({g.edge_id(0, 3), g.edge_id(0, 4), g.edge_id(3, 4)})
    assert {p.edges for p in d.parts} == {tri1, tri2}


def test_not_even_rejected():
    with pytest.raises(NotEven):
        even_to_two_regular(complete_graph(4))


def test_empty_graph():
    assert even_to_two_regular(Graph(3, [])).size == 0


def test_exact_delta_halves_sweep_n6():
    from cyclesmith.enumeration import iter_graphs

    for n in range(3, 7):
        count = 0
        for g in iter_graphs(n, "even"):
            count += 1
            d = even_to_two_regular(g)
            assert d.size == g.max_degree() // 2
            assert verify_decomposition(g, d, {PartKind.TWO_REGULAR}).ok
        assert count > 0


def test_disconnected_even_uses_global_delta():
    # triangle (local max degree 2) next to a K5 (max degree 4)
    edges = [(0, 1), (0, 2), (1, 2)]
    k5 = complete_graph(5)
    edges += [(u + 3, v + 3) for u, v in k5.edges]
    g = Graph(8, edges)
    d = even_to_two_regular(g)
    assert d.size == 2
    assert verify_decomposition(g, d, {PartKind.TWO_REGULAR}).ok


def test_two_factorization_c5():
    d = petersen_two_factorization(cycle_graph(5))
    assert d.size == 1 and d.meta["spanning"] == [True]


def test_two_factorization_k5():
    g = complete_graph(5)
    d = petersen_two_factorization(g)
    assert d.size == 2
    for part in d.parts:
        deg = {}
        for eid in part.edges:
            for x in g.edges[eid]:
                deg[x] = deg.get(x, 0) + 1
        assert deg == {v: 2 for v in range(5)}


def test_two_factorization_circulant():
    g = circulant_graph(8, (1, 2))
    d = petersen_two_factorization(g)
    assert d.size == 2 and all(d.meta["spanning"])
    assert verify_decomposition(g, d, {PartKind.TWO_REGULAR}).ok


def test_two_factorization_rejects_irregular():
    with pytest.raises(NotRegularEven):
        petersen_two_factorization(bowtie_graph())
    with pytest.raises(NotRegularEven):
        petersen_two_factorization(complete_graph(4))  # 3-regular, odd


def test_girth_bound_k5():
    g = complete_graph(5)
    d, bound = girth_bound_decompose(g)
    assert bound == Fraction(10, 3)
    assert d.size <= bound
    assert verify_decomposition(g, d, {PartKind.CYCLE}).ok


def test_girth_bound_c7():
    d, bound = girth_bound_decompose(cycle_graph(7))
    assert d.size == 1 and bound == 1


def test_girth_bound_circulant():
    g = circulant_graph(8, (1, 2))
    d, bound = girth_bound_decompose(g)
    assert bound == Fraction(16, 3)
    assert d.size <= 5
    assert verify_decomposition(g, d, {PartKind.CYCLE}).ok
