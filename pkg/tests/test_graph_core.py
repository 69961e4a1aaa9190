"""Foundational graph algorithms against brute-force oracles."""

import itertools
import math
import random

import pytest

from conftest import (
    all_labeled_graphs,
    bowtie_graph,
    circulant_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from cyclesmith.errors import NoSuchCycle, NotEven
from cyclesmith.graph import (
    Graph,
    connected_components,
    cut_vertices_and_blocks,
    cycle_through_two_edges,
    eulerian_circuit,
    find_claw,
    girth,
    is_connected,
    parse_edge_list,
    write_dot,
    write_edge_list,
)


def random_graph(rng, n, p):
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


# -- oracles ------------------------------------------------------------------

def oracle_components(g):
    comps = []
    left = set(range(g.n))
    while left:
        s = min(left)
        comp = {s}
        frontier = {s}
        while frontier:
            frontier = {y for x in frontier for y in g.adj[x]} - comp
            comp |= frontier
        comps.append(sorted(comp))
        left -= comp
    return comps


def oracle_cut_vertices(g):
    base = len(oracle_components(g))
    cuts = []
    for v in range(g.n):
        keep = [e for e in g.edges if v not in e]
        h = Graph(g.n, keep)
        # removing v leaves it isolated; discount that component
        comps = [c for c in oracle_components(h) if c != [v]]
        if len(comps) > base - (1 if not g.adj[v] else 0):
            cuts.append(v)
    return cuts


def oracle_girth(g):
    best = math.inf
    for k in range(3, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            # count induced... instead: check all cyclic orderings
            for perm in itertools.permutations(sub[1:]):
                seq = (sub[0],) + perm
                if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    best = min(best, k)
                    break
            else:
                continue
            break
        if best < math.inf:
            return best
    return best


def oracle_has_claw(g):
    for quad in itertools.combinations(range(g.n), 4):
        for c in quad:
            leaves = [x for x in quad if x != c]
            if all(g.has_edge(c, x) for x in leaves) and not any(
                g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2)
            ):
                return True
    return False


# -- components / blocks ------------------------------------------------------

def test_components_small_sweep():
    for n in range(6):
        for g in all_labeled_graphs(n):
            assert connected_components(g) == oracle_components(g)


def test_is_connected():
    assert is_connected(complete_graph(4))
    assert is_connected(Graph(1, []))
    assert not is_connected(Graph(2, []))


def test_cut_vertices_sweep():
    for n in range(2, 6):
        for g in all_labeled_graphs(n):
            cuts, blocks = cut_vertices_and_blocks(g)
            assert cuts == oracle_cut_vertices(g)
            # blocks partition the edge set
            all_ids = sorted(i for b in blocks for i in b)
            assert all_ids == list(range(g.m))


def test_cut_vertices_random():
    rng = random.Random(11)
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        cuts, blocks = cut_vertices_and_blocks(g)
        assert cuts == oracle_cut_vertices(g)
        all_ids = sorted(i for b in blocks for i in b)
        assert all_ids == list(range(g.m))


def test_blocks_bowtie():
    cuts, blocks = cut_vertices_and_blocks(bowtie_graph())
    assert cuts == [0]
    assert len(blocks) == 2
    assert sorted(len(b) for b in blocks) == [3, 3]


# -- girth ---------------------------------------------------------------------

def test_girth_examples():
    assert girth(path_graph(4)) == math.inf
    assert girth(cycle_graph(5)) == 5
    assert girth(complete_graph(4)) == 3
    assert girth(petersen_graph()) == 5
    assert girth(circulant_graph(8, (1, 2))) == 3


def test_girth_sweep():
    for n in range(5):
        for g in all_labeled_graphs(n):
            assert girth(g) == oracle_girth(g)


def test_girth_random_n8():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, 8, rng.choice([0.15, 0.3, 0.5]))
        assert girth(g) == oracle_girth(g)


# -- Euler circuits -------------------------------------------------------------

def test_euler_k3():
    w = eulerian_circuit(complete_graph(3), 0)
    assert w.closed and len(w) == 3
    assert w.vertices == (0, 1, 2, 0)


def test_euler_c4():
    w = eulerian_circuit(cycle_graph(4), 0)
    assert w.vertices == (0, 1, 2, 3, 0)


def test_euler_bowtie():
    w = eulerian_circuit(bowtie_graph(), 0)
    assert w.closed and len(w) == 6
    assert w.vertices.count(0) == 3  # start, middle, end


def test_euler_odd_degree_rejected():
    with pytest.raises(NotEven):
        eulerian_circuit(path_graph(3), 0)


def test_euler_uses_each_edge_once():
    rng = random.Random(23)
    found = 0
    while found < 40:
        g = random_graph(rng, rng.randint(3, 9), 0.5)
        comp0 = connected_components(g)[0]
        if any(len(g.adj[v]) % 2 for v in comp0) or len(comp0) < 3:
            continue
        found += 1
        w = eulerian_circuit(g, comp0[0])
        comp_edges = [i for i, (u, v) in enumerate(g.edges) if u in set(comp0)]
        assert sorted(w.edge_ids) == comp_edges
        assert w.closed
        for i, eid in enumerate(w.edge_ids):
            assert set(g.edges[eid]) == {w.vertices[i], w.vertices[i + 1]}


# -- cycle through two edges -----------------------------------------------------

def assert_is_cycle(g, edge_ids):
    deg = {}
    for eid in edge_ids:
        for x in g.edges[eid]:
            deg[x] = deg.get(x, 0) + 1
    assert all(d == 2 for d in deg.values())
    verts = sorted(deg)
    sub = Graph(g.n, [g.edges[i] for i in edge_ids])
    comps = [c for c in connected_components(sub) if len(c) > 1]
    assert len(comps) == 1 and sorted(comps[0]) == verts


def test_cycle_two_edges_k4():
    g = complete_graph(4)
    e1, e2 = g.edge_id(0, 1), g.edge_id(2, 3)
    cyc = cycle_through_two_edges(g, e1, e2)
    assert e1 in cyc and e2 in cyc
    assert_is_cycle(g, cyc)
    assert len(cyc) == 4


def test_cycle_two_edges_c5():
    g = cycle_graph(5)
    cyc = cycle_through_two_edges(g, g.edge_id(0, 1), g.edge_id(2, 3))
    assert cyc == frozenset(range(5))


def test_cycle_two_edges_bowtie_fails():
    g = bowtie_graph()
    with pytest.raises(NoSuchCycle):
        cycle_through_two_edges(g, g.edge_id(1, 2), g.edge_id(3, 4))


def test_cycle_two_edges_sharing_vertex():
    g = complete_graph(4)
    cyc = cycle_through_two_edges(g, g.edge_id(0, 1), g.edge_id(0, 2))
    assert_is_cycle(g, cyc)
    assert g.edge_id(0, 1) in cyc and g.edge_id(0, 2) in cyc


def test_cycle_two_edges_all_pairs_on_2connected():
    for g in (complete_graph(5), petersen_graph(), circulant_graph(7, (1, 2))):
        for e1, e2 in itertools.combinations(range(g.m), 2):
            cyc = cycle_through_two_edges(g, e1, e2)
            assert e1 in cyc and e2 in cyc
            assert_is_cycle(g, cyc)


# -- claws -----------------------------------------------------------------------

def test_find_claw_examples():
    g = star_graph(3)
    assert find_claw(g) == (0, (1, 2, 3))
    assert find_claw(complete_graph(5)) is None
    got = find_claw(petersen_graph())
    assert got is not None
    c, leaves = got
    assert all(petersen_graph().has_edge(c, x) for x in leaves)


def test_find_claw_sweep():
    for n in range(5):
        for g in all_labeled_graphs(n):
            assert (find_claw(g) is not None) == oracle_has_claw(g)


def test_find_claw_random_n8():
    rng = random.Random(3)
    for _ in range(120):
        g = random_graph(rng, 8, rng.choice([0.2, 0.4, 0.6]))
        got = find_claw(g)
        assert (got is not None) == oracle_has_claw(g)
        if got:
            c, (a, b, d) = got
            assert all(g.has_edge(c, x) for x in (a, b, d))
            assert not g.has_edge(a, b) and not g.has_edge(a, d) and not g.has_edge(b, d)


# -- text formats ------------------------------------------------------------------

def test_edge_list_roundtrip():
    g = petersen_graph()
    assert parse_edge_list(write_edge_list(g)) == g


def test_edge_list_rejects_bad_input():
    from cyclesmith.errors import MalformedEdgeList
    for text in ("", "3\n", "2 1\n1 0\n", "2 1\n0 2\n", "2 2\n0 1\n"):
        with pytest.raises(MalformedEdgeList):
            parse_edge_list(text)


def test_dot_export_mentions_parts():
    g = complete_graph(3)
    dot = write_dot(g, parts=[[0, 1], [2]])
    assert "graph G {" in dot
    assert 'color="red"' in dot and 'color="blue"' in dot
