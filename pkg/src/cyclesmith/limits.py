"""Resource limits for the exact searches, overridable via the
``CYCLESMITH_EXACT_LIMITS`` environment variable (comma-separated
``name=value`` pairs, e.g. ``oracle_max_edges=24,cover_exact_max_edges=24``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import InvalidParams


@dataclass(frozen=True)
class Limits:
    oracle_max_edges: int = 20
    oracle_max_cycles: int = 100_000
    oracle_node_cap: int = 20_000_000
    linkage_exact_max_t: int = 18
    cover_exact_max_edges: int = 16
    greedy_exact_max_n: int = 12


def limits_from_env(base: Limits | None = None) -> Limits:
    lim = base or Limits()
    raw = os.environ.get("CYCLESMITH_EXACT_LIMITS", "").strip()
    if not raw:
        return lim
    fields = {f for f in Limits.__dataclass_fields__}
    updates = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InvalidParams(f"bad CYCLESMITH_EXACT_LIMITS entry {item!r}")
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in fields:
            raise InvalidParams(f"unknown limit {key!r}")
        try:
            updates[key] = int(val)
        except ValueError as exc:
            raise InvalidParams(f"limit {key!r} needs an integer") from exc
    return replace(lim, **updates)


def default_limits() -> Limits:
    return limits_from_env()
