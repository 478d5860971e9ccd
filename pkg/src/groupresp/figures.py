"""Built-in example scenarios: the deer evasion, the distributed test, the
coordination game, the repeated machine warning, and the coordination game
with an ambiguous root. Node and action names follow the figures."""

from .errors import BadParameter
from .model import validate


def fig1a(p=0.3):
    """Autonomous vehicle approaching a deer: evading succeeds with
    probability p, keeping steady crashes iff the deer stays."""
    if not (0.0 < p < 1.0):
        raise BadParameter(f"fig1a requires 0 < p < 1, got {p!r}")
    return validate({
        "agents": ["i"],
        "nodes": {
            "v1": {"kind": "decision", "owner": "i"},
            "v2": {"kind": "probability"},
            "v3": {"kind": "ambiguity"},
            "w1": {"kind": "outcome"},
            "w2": {"kind": "outcome", "undesirable": True},
            "w3": {"kind": "outcome"},
            "w4": {"kind": "outcome", "undesirable": True},
        },
        "edges": [
            {"from": "v1", "to": "v2", "action": "evade"},
            {"from": "v1", "to": "v3", "action": "steady"},
            {"from": "v2", "to": "w1", "p": p},
            {"from": "v2", "to": "w2", "p": 1.0 - p},
            {"from": "v3", "to": "w3", "action": "deer moves"},
            {"from": "v3", "to": "w4", "action": "deer stays"},
        ],
        "root": "v1",
        "info_sets": [],
    })


def fig1b():
    """Two system instances that may test for a failure; j cannot tell
    whether i tested. Only double-ignore overlooks the failure."""
    return validate({
        "agents": ["i", "j"],
        "nodes": {
            "v1": {"kind": "decision", "owner": "i"},
            "v2": {"kind": "decision", "owner": "j"},
            "v3": {"kind": "decision", "owner": "j"},
            "w1": {"kind": "outcome", "undesirable": True},
            "w2": {"kind": "outcome"},
            "w3": {"kind": "outcome"},
            "w4": {"kind": "outcome"},
        },
        "edges": [
            {"from": "v1", "to": "v2", "action": "ignore"},
            {"from": "v1", "to": "v3", "action": "test"},
            {"from": "v2", "to": "w1", "action": "ignore"},
            {"from": "v2", "to": "w2", "action": "test"},
            {"from": "v3", "to": "w3", "action": "ignore"},
            {"from": "v3", "to": "w4", "action": "test"},
        ],
        "root": "v1",
        "info_sets": [["v2", "v3"]],
    })


def fig2():
    """Coordination game: two vehicles crash unless both go left or both go
    right; j does not see i's move."""
    return validate({
        "agents": ["i", "j"],
        "nodes": {
            "v1": {"kind": "decision", "owner": "i"},
            "v2": {"kind": "decision", "owner": "j"},
            "v3": {"kind": "decision", "owner": "j"},
            "w1": {"kind": "outcome"},
            "w2": {"kind": "outcome", "undesirable": True},
            "w3": {"kind": "outcome", "undesirable": True},
            "w4": {"kind": "outcome"},
        },
        "edges": [
            {"from": "v1", "to": "v2", "action": "left"},
            {"from": "v1", "to": "v3", "action": "right"},
            {"from": "v2", "to": "w1", "action": "left"},
            {"from": "v2", "to": "w2", "action": "right"},
            {"from": "v3", "to": "w3", "action": "left"},
            {"from": "v3", "to": "w4", "action": "right"},
        ],
        "root": "v1",
        "info_sets": [["v2", "v3"]],
    })


def fig3():
    """Repeated machine warning: the operator may repair or continue; each
    continue risks irreversible damage with probability 0.9."""
    return validate({
        "agents": ["i"],
        "nodes": {
            "v1": {"kind": "decision", "owner": "i"},
            "w1": {"kind": "outcome"},
            "v2": {"kind": "probability"},
            "w2": {"kind": "outcome", "undesirable": True},
            "v3": {"kind": "decision", "owner": "i"},
            "w3": {"kind": "outcome"},
            "v4": {"kind": "probability"},
            "w4": {"kind": "outcome", "undesirable": True},
            "v5": {"kind": "decision", "owner": "i"},
            "w5": {"kind": "outcome"},
            "w6": {"kind": "outcome", "undesirable": True},
        },
        "edges": [
            {"from": "v1", "to": "w1", "action": "repair"},
            {"from": "v1", "to": "v2", "action": "continue"},
            {"from": "v2", "to": "v3", "p": 0.1},
            {"from": "v2", "to": "w2", "p": 0.9},
            {"from": "v3", "to": "w3", "action": "repair"},
            {"from": "v3", "to": "v4", "action": "continue"},
            {"from": "v4", "to": "v5", "p": 0.1},
            {"from": "v4", "to": "w4", "p": 0.9},
            {"from": "v5", "to": "w5", "action": "repair"},
            {"from": "v5", "to": "w6", "action": "continue"},
        ],
        "root": "v1",
        "info_sets": [],
    })


def fig4():
    """Coordination game against nature: an ambiguous root decides whether
    warming averts an ice age or causes a crisis; the agent cannot tell."""
    return validate({
        "agents": ["i"],
        "nodes": {
            "v0": {"kind": "ambiguity"},
            "v1": {"kind": "decision", "owner": "i"},
            "v2": {"kind": "decision", "owner": "i"},
            "w1": {"kind": "outcome"},
            "w2": {"kind": "outcome", "undesirable": True},
            "w3": {"kind": "outcome", "undesirable": True},
            "w4": {"kind": "outcome"},
        },
        "edges": [
            {"from": "v0", "to": "v1", "action": "no risk"},
            {"from": "v0", "to": "v2", "action": "cooling"},
            {"from": "v1", "to": "w1", "action": "ignore"},
            {"from": "v1", "to": "w2", "action": "heat up"},
            {"from": "v2", "to": "w3", "action": "ignore"},
            {"from": "v2", "to": "w4", "action": "heat up"},
        ],
        "root": "v0",
        "info_sets": [["v1", "v2"]],
    })


BUILTIN_NAMES = ("fig1a", "fig1b", "fig2", "fig3", "fig4")


def builtin(name, p=0.3):
    """Construct a built-in scenario by name; fig1a takes its p parameter."""
    if name == "fig1a":
        return fig1a(p)
    if name in BUILTIN_NAMES:
        return {"fig1b": fig1b, "fig2": fig2, "fig3": fig3, "fig4": fig4}[name]()
    raise BadParameter(f"unknown built-in scenario {name!r}")
