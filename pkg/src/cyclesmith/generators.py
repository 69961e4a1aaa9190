"""Named graph families and the seeded random generators."""

from __future__ import annotations

import itertools
import random

from .errors import InvalidParams
from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("complete needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def k4_with_trees(sizes, seed: int = 0) -> Graph:
    """K4 on vertices 0..3 with a random tree of ``sizes[i]`` extra
    vertices hanging off K4 vertex i.  sizes (0,0,0,0) gives the bare K4."""
    if len(sizes) != 4 or any(s < 0 for s in sizes):
        raise InvalidParams("k4trees needs four nonnegative tree sizes")
    rng = random.Random(seed)
    edges = list(itertools.combinations(range(4), 2))
    nxt = 4
    for root, size in zip(range(4), sizes):
        grown = [root]
        for _ in range(size):
            attach = rng.choice(grown)
            edges.append((attach, nxt) if attach < nxt else (nxt, attach))
            grown.append(nxt)
            nxt += 1
    return Graph(nxt, edges)


def random_regular(n: int, k: int, seed: int = 0, tries: int = 10_000) -> Graph:
    """k-regular graph on n vertices by the pairing model with rejection
    of loops and parallel edges.  Deterministic for a fixed seed."""
    if n * k % 2:
        raise InvalidParams(f"n*k = {n}*{k} must be even")
    if k >= n:
        raise InvalidParams("regularity k must be below n")
    rng = random.Random(seed)
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(k)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, edges)
    raise InvalidParams(f"pairing model failed to produce a simple {k}-regular "
                        f"graph on {n} vertices in {tries} tries")


def random_clawfree(n_max: int, seed: int = 0) -> Graph:
    """Random claw-free graph: start from a random graph and densify each
    claw by joining two of its leaves, which terminates (edges only grow)."""
    from .graph import find_claw

    rng = random.Random(seed)
    n = rng.randint(4, max(4, n_max))
    p = rng.choice((0.25, 0.4, 0.6))
    edges = {e for e in itertools.combinations(range(n), 2) if rng.random() < p}
    g = Graph(n, edges)
    while True:
        claw = find_claw(g)
        if claw is None:
            return g
        _c, (l1, l2, _l3) = claw
        edges.add((min(l1, l2), max(l1, l2)))
        g = Graph(n, edges)
