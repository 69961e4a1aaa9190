"""Limit configuration and the environment override."""

import pytest

from cyclesmith.errors import InvalidParams
from cyclesmith.limits import Limits, limits_from_env


def test_defaults():
    lim = Limits()
    assert lim.oracle_max_edges == 20
    assert lim.cover_exact_max_edges == 16
    assert lim.linkage_exact_max_t == 18
    assert lim.oracle_max_cycles == 100_000


def test_env_override(monkeypatch):
    monkeypatch.setenv("CYCLESMITH_EXACT_LIMITS",
                       "oracle_max_edges=24, cover_exact_max_edges=24")
    lim = limits_from_env()
    assert lim.oracle_max_edges == 24
    assert lim.cover_exact_max_edges == 24
    assert lim.linkage_exact_max_t == 18  # untouched


def test_env_rejects_unknown_key(monkeypatch):
    monkeypatch.setenv("CYCLESMITH_EXACT_LIMITS", "bogus=3")
    with pytest.raises(InvalidParams):
        limits_from_env()


def test_env_rejects_bad_value(monkeypatch):
    monkeypatch.setenv("CYCLESMITH_EXACT_LIMITS", "oracle_max_edges=abc")
    with pytest.raises(InvalidParams):
        limits_from_env()


def test_determinism_of_certificates():
    """Same input, same certificate, byte for byte."""
    import json

    from conftest import petersen_graph
    from cyclesmith.decomposer import decompose_auto
    from cyclesmith.verify import certificate_to_json

    g = petersen_graph()
    a = json.dumps(certificate_to_json(g, decompose_auto(g)), sort_keys=True)
    b = json.dumps(certificate_to_json(g, decompose_auto(g)), sort_keys=True)
    assert a == b
