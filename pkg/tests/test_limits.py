import pytest

from groupresp import config
from groupresp.aggregation import MPROD
from groupresp.axioms import check_nrv, check_nur
from groupresp.contribution import RISK
from groupresp.engine import enumerate_strategies
from groupresp.errors import ExplosionGuard
from groupresp.figures import fig3
from groupresp.model import validate
from groupresp.responsibility import ResponsibilityFunction


def test_env_var_overrides_cap(monkeypatch):
    monkeypatch.setenv("GROUPRESP_ENUM_CAP", "2")
    config.set_enumeration_cap(None)
    try:
        with pytest.raises(ExplosionGuard) as excinfo:
            enumerate_strategies(fig3(), {"i"}, "v1")
        assert excinfo.value.cap == 2
    finally:
        monkeypatch.delenv("GROUPRESP_ENUM_CAP")
        config.set_enumeration_cap(None)


def _wide_tree(agent_count):
    agents = [f"p{k}" for k in range(agent_count)]
    nodes = {"v0": {"kind": "decision", "owner": agents[0]}}
    edges = []
    for k, agent in enumerate(agents):
        good, bad = f"g{k}", f"b{k}"
        nodes[good] = {"kind": "outcome"}
        nodes[bad] = {"kind": "outcome", "undesirable": True}
        edges.append({"from": "v0", "to": good, "action": f"safe{k}"})
        edges.append({"from": "v0", "to": bad, "action": f"risky{k}"})
    return validate({"agents": agents, "nodes": nodes, "edges": edges,
                     "root": "v0", "info_sets": []})


def test_group_enumeration_capped_at_twelve_agents():
    tree = _wide_tree(13)
    rf = ResponsibilityFunction(RISK, MPROD)
    with pytest.raises(ExplosionGuard):
        check_nrv(tree, rf)
    with pytest.raises(ExplosionGuard):
        check_nur(tree, rf)


def test_twelve_agents_still_enumerable():
    tree = _wide_tree(3)
    rf = ResponsibilityFunction(RISK, MPROD)
    report = check_nrv(tree, rf)
    assert report.instances == 3  # one per undesirable outcome
