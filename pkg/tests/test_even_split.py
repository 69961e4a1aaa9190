"""Even/forest splits and the n-3 trichotomy."""

import itertools

import pytest

from conftest import all_labeled_graphs, complete_graph, cycle_graph, path_graph
from cyclesmith.enumeration import iter_graphs
from cyclesmith.errors import PreconditionError
from cyclesmith.even_split import (
    SplitClass,
    classify_n3,
    even_forest_split,
    split_to_certificate,
)
from cyclesmith.graph import Graph, is_connected
from cyclesmith.verify import PartKind, verify_decomposition

SPLIT_KINDS = {PartKind.EVEN, PartKind.SINGLE_EDGE}


def is_forest(g, edge_ids):
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in edge_ids:
        u, v = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def all_degrees_even(g, edge_ids):
    deg = {}
    for eid in edge_ids:
        for x in g.edges[eid]:
            deg[x] = deg.get(x, 0) + 1
    return all(d % 2 == 0 for d in deg.values())


def brute_force_max_even_size(g):
    """Largest even edge subset, by scanning all subsets (tiny graphs)."""
    best = 0
    for r in range(g.m, best, -1):
        for sub in itertools.combinations(range(g.m), r):
            if all_degrees_even(g, sub):
                return r
    return 0


def test_c5_already_even():
    cert = even_forest_split(cycle_graph(5))
    assert cert.even_edges == frozenset(range(5))
    assert cert.forest_edges == frozenset()


def test_k4_split():
    g = complete_graph(4)
    cert = even_forest_split(g)
    assert len(cert.even_edges) == 4 and all_degrees_even(g, cert.even_edges)
    assert len(cert.forest_edges) == 2 == g.n - 2
    d = split_to_certificate(g, cert)
    assert verify_decomposition(g, d, SPLIT_KINDS).ok


def test_path_has_no_cycle():
    cert = even_forest_split(path_graph(4))
    assert cert.classification is SplitClass.HAS_NO_CYCLE
    assert cert.even_edges == frozenset()
    assert len(cert.forest_edges) == 3


def test_split_sweep_n5():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            cert = even_forest_split(g)
            assert all_degrees_even(g, cert.even_edges)
            assert is_forest(g, cert.forest_edges)
            assert cert.even_edges | cert.forest_edges == frozenset(range(g.m))
            assert not (cert.even_edges & cert.forest_edges)
            if is_connected(g) and g.m >= g.n:  # connected with a cycle
                assert len(cert.forest_edges) <= g.n - 2


def test_classify_k4_type2():
    cert = classify_n3(complete_graph(4))
    assert cert.classification is SplitClass.TYPE_II
    assert cert.witness == (0, 1, 2, 3)


def test_classify_k4_pendant_type2():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
    cert = classify_n3(g)
    assert cert.classification is SplitClass.TYPE_II
    assert cert.witness == (0, 1, 2, 3)


def test_classify_k5_type1_empty_forest():
    cert = classify_n3(complete_graph(5))
    assert cert.classification is SplitClass.TYPE_I
    assert cert.forest_edges == frozenset()
    assert cert.even_edges == frozenset(range(10))


def test_classify_rejects_bad_input():
    with pytest.raises(PreconditionError):
        classify_n3(path_graph(4))
    with pytest.raises(PreconditionError):
        classify_n3(Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]))


def test_classify_uses_maximum_even_subgraph_n5():
    for n in range(3, 6):
        for g in all_labeled_graphs(n):
            if not (is_connected(g) and g.m >= g.n):
                continue
            cert = classify_n3(g)
            assert len(cert.even_edges) == brute_force_max_even_size(g)
            assert all_degrees_even(g, cert.even_edges)
            assert is_forest(g, cert.forest_edges)


def test_trichotomy_sweep_n6():
    """TypeII iff the brute-force K4-with-trees recogniser accepts; TypeI
    certificates stay within n-3 single edges."""
    from cyclesmith import _kernels as K
    from cyclesmith.enumeration import graph_to_mask

    for n in range(3, 7):
        count = 0
        for g in iter_graphs(n, "cyclic"):
            count += 1
            cert = classify_n3(g)
            brute = K.pure.mask_is_k4trees(g.n, graph_to_mask(g))
            if cert.classification is SplitClass.TYPE_II:
                assert brute
                assert len(cert.forest_edges) == g.n - 2
            else:
                assert not brute
                assert len(cert.forest_edges) <= g.n - 3
                d = split_to_certificate(g, cert)
                assert verify_decomposition(g, d, SPLIT_KINDS).ok
        assert count > 0
