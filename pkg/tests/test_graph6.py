"""graph6 parser/encoder against an independent reference implementation.

The reference encoder below is written directly from the published format
description (single-byte size, upper triangle in column order, 6-bit
groups offset by 63) and shares no code with the package.
"""

import itertools
import random

import pytest

from cyclesmith.errors import MalformedGraph6, UnsupportedFormat
from cyclesmith.graph import Graph, parse_graph6, write_graph6


def reference_encode(n, edge_set):
    assert n <= 62
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if (row, col) in edge_set else 0)
    while len(bits) % 6 != 0:
        bits.append(0)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        value = sum(b << (5 - j) for j, b in enumerate(group))
        chars.append(chr(value + 63))
    return "".join(chars)


def test_k3_example():
    g = parse_graph6("Bw")
    assert g.n == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_empty_five_vertices():
    g = parse_graph6("D??")
    assert g.n == 5
    assert g.m == 0


def test_c4_example():
    g = parse_graph6("Cl")
    assert g.n == 4
    assert set(g.edges) == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_header_stripped():
    g = parse_graph6(">>graph6<<Bw\n")
    assert g.n == 3 and g.m == 3


def test_roundtrip_exhaustive_n_le_5():
    for n in range(6):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edge_set = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
            s = reference_encode(n, edge_set)
            g = parse_graph6(s)
            assert g.n == n
            assert set(g.edges) == edge_set
            assert write_graph6(g) == s
            assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_random_n_le_8():
    rng = random.Random(20240917)
    for _ in range(300):
        n = rng.randint(0, 8)
        pairs = list(itertools.combinations(range(n), 2))
        edge_set = {p for p in pairs if rng.random() < 0.4}
        s = reference_encode(n, edge_set)
        g = parse_graph6(s)
        assert set(g.edges) == edge_set
        assert write_graph6(g) == s


def test_roundtrip_larger_random():
    rng = random.Random(7)
    for n in (20, 40, 62):
        pairs = list(itertools.combinations(range(n), 2))
        edge_set = {p for p in pairs if rng.random() < 0.1}
        g = Graph(n, edge_set)
        assert parse_graph6(write_graph6(g)) == g


def test_bad_length_rejected():
    with pytest.raises(MalformedGraph6):
        parse_graph6("B")  # n=3 needs one payload byte
    with pytest.raises(MalformedGraph6):
        parse_graph6("Bww")


def test_bad_byte_rejected():
    with pytest.raises(MalformedGraph6):
        parse_graph6("B\x1f")


def test_nonzero_padding_rejected():
    # n=3 uses 3 bits; set a padding bit: value 0b000001 -> '@'
    with pytest.raises(MalformedGraph6):
        parse_graph6("B" + chr(63 + 0b000001))


def test_large_n_unsupported():
    with pytest.raises(UnsupportedFormat):
        parse_graph6(chr(126) + "???")
    with pytest.raises(UnsupportedFormat):
        write_graph6(Graph(63, []))
