"""Exhaustive theorem checks over labeled-graph corpora.

Each check takes one graph and returns a record (part count, bound, ok);
``run_corpus`` drives a check over every graph passing a filter at each
order up to max_n.  The acceptance suite and the CLI ``corpus`` command
share this module, so a passing acceptance run and a passing CLI sweep
are the same computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _kernels as K
from .cover import cover_cycles_edges, even_cycle_cover
from .decomposer import decompose_clawfree, decompose_maxdeg4
from .enumeration import FILTER_FLAGS, iter_masks, mask_to_graph
from .errors import InvalidParams
from .even_split import SplitClass, classify_n3, even_forest_split
from .graph import Graph, write_graph6
from .limits import Limits, default_limits
from .oracle import exact_gce, exact_re
from .regular_decomp import even_to_two_regular
from .verify import PartKind, verify_cover, verify_decomposition


@dataclass
class Record:
    graph6: str
    method: str
    parts: int
    bound: float
    ok: bool


@dataclass
class CorpusReport:
    check: str
    filter: str
    max_n: int
    total: int = 0
    failures: list = field(default_factory=list)
    max_ratio: float = 0.0
    records: list | None = None

    def add(self, rec: Record):
        self.total += 1
        if rec.bound > 0:
            self.max_ratio = max(self.max_ratio, rec.parts / rec.bound)
        if not rec.ok:
            self.failures.append(rec)
        if self.records is not None:
            self.records.append(rec)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        obj = {
            "check": self.check,
            "filter": self.filter,
            "max_n": self.max_n,
            "total": self.total,
            "ok": self.ok,
            "max_ratio": self.max_ratio,
            "failures": [vars(r) for r in self.failures],
        }
        if self.records is not None:
            obj["records"] = [vars(r) for r in self.records]
        return obj


def _rec(g, method, parts, bound, ok) -> Record:
    return Record(write_graph6(g), method, parts, bound, ok)


def check_maxdeg4(g: Graph, limits: Limits) -> Record:
    d = decompose_maxdeg4(g, limits)
    v = verify_decomposition(g, d, {PartKind.CYCLE, PartKind.SINGLE_EDGE})
    bound = g.n - 1
    return _rec(g, "maxdeg4", d.size, bound, v.ok and d.size <= bound)


def check_evendelta(g: Graph, limits: Limits) -> Record:
    d = even_to_two_regular(g)
    v = verify_decomposition(g, d, {PartKind.TWO_REGULAR})
    bound = g.max_degree() // 2
    return _rec(g, "even2reg", d.size, bound, v.ok and d.size == bound)


def check_evendelta_oracle(g: Graph, limits: Limits) -> Record:
    value = exact_re(g, limits).value
    bound = g.max_degree() // 2
    return _rec(g, "oracle-re", value, bound, value == bound)


def check_eulersplit(g: Graph, limits: Limits) -> Record:
    cert = even_forest_split(g)
    from .even_split import split_to_certificate

    d = split_to_certificate(g, cert)
    v = verify_decomposition(g, d, {PartKind.EVEN, PartKind.SINGLE_EDGE})
    forest_ok = _is_forest(g, cert.forest_edges)
    bound = g.n - 2
    return _rec(g, "even-forest-split", len(cert.forest_edges), bound,
                v.ok and forest_ok and len(cert.forest_edges) <= bound)


def check_n3even(g: Graph, limits: Limits) -> Record:
    cert = classify_n3(g)
    from .enumeration import graph_to_mask

    brute = K.mask_is_k4trees(g.n, graph_to_mask(g))
    if cert.classification is SplitClass.TYPE_II:
        ok = brute and cert.witness is not None
        return _rec(g, "classify-n3", len(cert.forest_edges), g.n - 2, ok)
    from .even_split import split_to_certificate

    d = split_to_certificate(g, cert)
    v = verify_decomposition(g, d, {PartKind.EVEN, PartKind.SINGLE_EDGE})
    bound = g.n - 3
    ok = (not brute) and v.ok and len(cert.forest_edges) <= bound
    return _rec(g, "classify-n3", len(cert.forest_edges), bound, ok)


def check_clawfree(g: Graph, limits: Limits) -> Record:
    d = decompose_clawfree(g, limits)
    v = verify_decomposition(g, d, {PartKind.TWO_REGULAR, PartKind.SINGLE_EDGE})
    bound = g.n - 1
    return _rec(g, "clawfree", d.size, bound, v.ok and d.size <= bound)


def check_cover(g: Graph, limits: Limits) -> Record:
    c = cover_cycles_edges(g, limits)
    v = verify_cover(g, c, {PartKind.CYCLE, PartKind.SINGLE_EDGE})
    bound = g.n - 2
    return _rec(g, "cover", c.size, bound, v.ok and c.size <= bound)


def check_cover_oracle(g: Graph, limits: Limits) -> Record:
    value = exact_gce(g, limits).value
    bound = g.n - 2
    return _rec(g, "oracle-gce", value, bound, value <= bound)


def check_fan(g: Graph, limits: Limits) -> Record:
    c = even_cycle_cover(g, limits)
    v = verify_cover(g, c, {PartKind.CYCLE})
    bound = (g.n - 1) // 2
    ok = v.ok and c.size <= bound and c.meta.get("bound_guaranteed", False)
    return _rec(g, "even-cycle-cover", c.size, bound, ok)


def _is_forest(g: Graph, edge_ids) -> bool:
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


CHECKS = {
    "thm-maxdeg4": ("maxdeg4", check_maxdeg4),
    "thm-evendelta": ("even", check_evendelta),
    "thm-evendelta-oracle": ("even", check_evendelta_oracle),
    "thm-eulersplit": ("cyclic", check_eulersplit),
    "thm-n3even": ("cyclic", check_n3even),
    "thm-clawfree": ("clawfree", check_clawfree),
    "thm-cover": ("nontree", check_cover),
    "thm-cover-oracle": ("nontree", check_cover_oracle),
    "thm-fan": ("even", check_fan),
}


def _exhaustive_max(filter_name: str) -> int:
    """Largest n enumerated exhaustively: the cycle-space walk keeps the
    even filter feasible one order longer than the full mask scan."""
    return 8 if filter_name == "even" else 7


def _random_masks(n: int, filter_name: str, samples: int, seed: int):
    """Seeded random graphs passing the filter, as pair masks.  Each filter
    gets a generator under which it is not a rare event: the pairing model
    for max degree 4, claw densification for claw-free, a uniform
    cycle-space element for even, plain G(n, 1/2) otherwise; connectivity
    by rejection."""
    import random

    from .enumeration import graph_to_mask, total_masks
    from .generators import random_regular
    from .graph import find_claw

    if n > 62:
        raise InvalidParams("random corpus mode is limited to n <= 62")
    rng = random.Random(f"{seed}:{n}:{filter_name}")
    basis = None
    out = []
    attempts = 0
    cap = samples * 2000
    while len(out) < samples and attempts < cap:
        attempts += 1
        if filter_name == "maxdeg4":
            try:
                g = random_regular(n, 4, seed=rng.randrange(1 << 30))
            except InvalidParams:
                raise InvalidParams("maxdeg4 random mode needs even 4n")
            mask = graph_to_mask(g)
        elif filter_name == "clawfree":
            mask = rng.randrange(total_masks(n))
            g = mask_to_graph(n, mask)
            while True:
                claw = find_claw(g)
                if claw is None:
                    break
                _c, (l1, l2, _l3) = claw
                g = Graph(n, list(g.edges) + [(min(l1, l2), max(l1, l2))])
            mask = graph_to_mask(g)
        elif filter_name == "even":
            if basis is None:
                from ._kernels.pure import _cycle_space_basis

                basis = _cycle_space_basis(n)
            mask = 0
            for b in basis:
                if rng.random() < 0.5:
                    mask ^= b
        else:
            mask = rng.randrange(total_masks(n))
        if FILTER_FLAGS[filter_name] & K.NONTREE and mask.bit_count() < n:
            continue
        if not K.mask_is_connected(n, mask):
            continue
        out.append(mask)
    return out


def run_corpus(
    check_name: str,
    max_n: int,
    filter_name: str | None = None,
    limits: Limits | None = None,
    min_n: int = 1,
    keep_records: bool = False,
    samples: int = 1000,
    seed: int = 0,
    progress=None,
) -> CorpusReport:
    """Exhaustive labeled enumeration up to the per-filter threshold (n <= 7,
    or n <= 8 for the even filter); seeded random sampling above it."""
    if check_name not in CHECKS:
        raise InvalidParams(f"unknown check {check_name!r}; "
                            f"choose from {sorted(CHECKS)}")
    default_filter, fn = CHECKS[check_name]
    filter_name = filter_name or default_filter
    if filter_name not in FILTER_FLAGS and filter_name != "even":
        raise InvalidParams(f"unknown filter {filter_name!r}")
    limits = limits or default_limits()
    report = CorpusReport(check_name, filter_name, max_n,
                          records=[] if keep_records else None)
    exhaustive_max = _exhaustive_max(filter_name)
    for n in range(max(min_n, 1), max_n + 1):
        if n <= exhaustive_max:
            masks = iter_masks(n, filter_name)
        else:
            masks = _random_masks(n, filter_name, samples, seed)
        for mask in masks:
            g = mask_to_graph(n, mask)
            report.add(fn(g, limits))
            if progress is not None and report.total % 100_000 == 0:
                progress(report)
    return report
