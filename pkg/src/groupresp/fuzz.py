"""Seeded random-tree generation and fuzz suites.

Identical config means an identical tree sequence and a byte-identical
report. Candidate trees whose worst-case enumeration size exceeds the
generation budget are rejected and regenerated (counted, never silently
truncated at check time). Information sets only link same-agent nodes with
equal action sets, no ancestry between members, and identical own-agent
histories; recall-violating partitions are accepted by the validator but
are out of scope for random auditing."""

import math
import random
from dataclasses import dataclass, asdict

from .axioms import MEMBER_CHECKS
from .contribution import BUILTIN_FUNCTIONS
from .engine import resolution_domain, scenario_actuals, strategy_domain
from .model import AMBIGUITY, DECISION, OUTCOME, PROBABILITY, validate


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    tree_count: int = 100
    max_depth: int = 4
    max_branching: int = 3
    max_agents: int = 3
    probability_node_rate: float = 0.2
    ambiguity_node_rate: float = 0.1
    info_set_rate: float = 0.5
    undesirable_rate: float = 0.4
    enum_budget: int = 4096


_ACTIONS = ("a", "b", "c", "d")


def _random_description(rng, cfg):
    agent_count = rng.randint(1, cfg.max_agents)
    agents = [f"p{k + 1}" for k in range(agent_count)]
    nodes = {}
    edges = []
    counter = [0]

    def fresh():
        counter[0] += 1
        return f"n{counter[0]}"

    def grow(node, depth):
        force_leaf = depth >= cfg.max_depth
        roll = rng.random()
        if force_leaf:
            kind = OUTCOME
        elif roll < cfg.probability_node_rate:
            kind = PROBABILITY
        elif roll < cfg.probability_node_rate + cfg.ambiguity_node_rate:
            kind = AMBIGUITY
        else:
            kind = DECISION
        if kind == OUTCOME:
            nodes[node] = {"kind": OUTCOME,
                           "undesirable": rng.random() < cfg.undesirable_rate}
            return
        branching = min(cfg.max_branching, len(_ACTIONS))
        if kind == DECISION:
            nodes[node] = {"kind": DECISION, "owner": rng.choice(agents)}
            width = 1 if rng.random() < 0.08 else rng.randint(2, branching)
        else:
            nodes[node] = {"kind": kind}
            width = rng.randint(2, branching)
        children = [fresh() for _ in range(width)]
        if kind == PROBABILITY:
            weights = [rng.random() + 0.05 for _ in children]
            total = sum(weights)
            probs = [w / total for w in weights[:-1]]
            probs.append(1.0 - sum(probs))
            for child, p in zip(children, probs):
                edges.append({"from": node, "to": child, "p": p})
        else:
            for child, label in zip(children, _ACTIONS):
                edges.append({"from": node, "to": child, "action": label})
        for child in children:
            grow(child, depth + 1)

    root = fresh()
    grow(root, 0)
    description = {"agents": agents, "nodes": nodes, "edges": edges,
                   "root": root, "info_sets": []}
    description["info_sets"] = _random_info_sets(rng, cfg, description)
    return description


def _own_history_signature(description, parents, owner, node):
    """(ancestor, action) pairs for same-owner ancestors; equal signatures
    are the perfect-recall compatibility requirement."""
    sig = []
    cursor = node
    while cursor in parents:
        edge = parents[cursor]
        parent = edge["from"]
        rec = description["nodes"][parent]
        if rec["kind"] == DECISION and rec.get("owner") == owner:
            sig.append((parent, edge["action"]))
        cursor = parent
    return tuple(reversed(sig))


def _random_info_sets(rng, cfg, description):
    parents = {e["to"]: e for e in description["edges"]}
    children = {}
    for e in description["edges"]:
        children.setdefault(e["from"], []).append(e)

    def ancestors(node):
        out = set()
        cursor = node
        while cursor in parents:
            cursor = parents[cursor]["from"]
            out.add(cursor)
        return out

    buckets = {}
    for node, rec in description["nodes"].items():
        if rec["kind"] != DECISION:
            continue
        owner = rec["owner"]
        labels = tuple(sorted(e["action"] for e in children.get(node, ())))
        sig = _own_history_signature(description, parents, owner, node)
        buckets.setdefault((owner, labels, sig), []).append(node)

    info_sets = []
    used = set()
    for key in sorted(buckets):
        pool = [n for n in buckets[key] if n not in used]
        while len(pool) >= 2:
            if rng.random() > cfg.info_set_rate:
                break
            size = min(len(pool), rng.choice((2, 2, 3)))
            members = pool[:size]
            if any(m in ancestors(n) for m in members for n in members if m != n):
                break
            info_sets.append(members)
            used.update(members)
            pool = pool[size:]
    return info_sets


def _enumeration_weight(tree, budget):
    """Worst enumeration size any checker can trigger: per decision node and
    singleton owner group, scenario resolutions times strategies. Aborts
    early once the budget is exceeded."""
    worst = 0
    groups = [frozenset([a]) for a in tree.agents]
    groups.append(frozenset(tree.agents))
    for group in groups:
        for anchor in (tree.root,) + tree.decision_nodes:
            strategies = math.prod(
                len(actions) for _, actions in strategy_domain(tree, group, anchor))
            if strategies > budget:
                return strategies
            scenarios = 0
            for actual in scenario_actuals(tree, group, anchor):
                scenarios += math.prod(
                    len(tree.edges_from(n))
                    for n in resolution_domain(tree, group, actual))
                if strategies * scenarios > budget:
                    return strategies * scenarios
            worst = max(worst, strategies * max(1, scenarios))
    return worst


def generate_trees(cfg: FuzzConfig):
    """The deterministic tree sequence for a config, plus rejection stats."""
    rng = random.Random(cfg.seed)
    trees = []
    rejected_budget = 0
    rejected_invalid = 0
    while len(trees) < cfg.tree_count:
        description = _random_description(rng, cfg)
        try:
            tree = validate(description)
        except Exception:
            rejected_invalid += 1
            continue
        if _enumeration_weight(tree, cfg.enum_budget) > cfg.enum_budget:
            rejected_budget += 1
            continue
        trees.append(tree)
    return trees, {"rejected_budget": rejected_budget,
                   "rejected_invalid": rejected_invalid}


def run_member_suite(cfg: FuzzConfig, functions=None, axioms=None):
    """Check the member axioms for every built-in (or given) contribution
    function over the config's tree sequence, one singleton group per agent.
    Returns a deterministic, JSON-ready report."""
    if cfg.tree_count == 0:
        return {"config": asdict(cfg), "trees": 0, "rejections": {},
                "violations": [], "checked": 0, "clamped": 0}
    functions = functions or list(BUILTIN_FUNCTIONS.values())
    axioms = axioms or list(MEMBER_CHECKS)
    trees, rejections = generate_trees(cfg)
    violations = []
    checked = 0
    instances = {f"{fn.name}/{axiom}": 0 for fn in functions for axiom in axioms}
    for index, tree in enumerate(trees):
        for fn in functions:
            for agent in tree.agents:
                group = frozenset([agent])
                for axiom in axioms:
                    checked += 1
                    report = MEMBER_CHECKS[axiom](tree, fn, group)
                    instances[f"{fn.name}/{axiom}"] += report.instances
                    if report.violated:
                        violations.append({
                            "tree_index": index,
                            "tree": tree.to_description(),
                            "function": fn.name,
                            "axiom": axiom,
                            "group": sorted(group),
                            "witness": report.witness,
                        })
    clamped = _count_clamped(trees, functions)
    return {
        "config": asdict(cfg),
        "trees": len(trees),
        "rejections": rejections,
        "checked": checked,
        "instances": instances,
        "clamped": clamped,
        "violations": violations,
    }


def run_agg_suite(seed=0, samples=10000, aggregators=None):
    """Audit the aggregation axioms for the built-in aggregators; flags any
    verdict that disagrees with the documented matrix."""
    from .agg_axioms import AGG_AXIOMS, SampleConfig, check_agg_axiom
    from .aggregation import BUILTIN_AGGREGATORS
    from .compliance import AGGREGATION_MATRIX

    aggregators = aggregators or list(BUILTIN_AGGREGATORS.values())
    cfg = SampleConfig(seed=seed, samples=samples)
    results = []
    unexpected = []
    for agg in aggregators:
        for axiom in AGG_AXIOMS:
            report = check_agg_axiom(agg, axiom, cfg)
            entry = {"aggregator": agg.name, **report.to_dict()}
            results.append(entry)
            expected = AGGREGATION_MATRIX.get(agg.name, {}).get(axiom)
            if expected is True and report.violated:
                unexpected.append(entry)
            if expected is False and not report.violated:
                unexpected.append({**entry, "expected": "violated"})
    return {"seed": seed, "samples": samples, "results": results,
            "unexpected": unexpected}


def run_outcome_suite(cfg: FuzzConfig, functions=None, aggregator=None):
    """Audit the outcome axioms for mprod-composed built-ins over the
    config's tree sequence; ✓ cells of the documented matrix must stay
    unviolated, × cells may fire."""
    from .aggregation import MPROD
    from .axioms import check_cc, check_nrv, check_nur
    from .compliance import OUTCOME_MATRIX
    from .responsibility import ResponsibilityFunction

    functions = functions or list(BUILTIN_FUNCTIONS.values())
    aggregator = aggregator or MPROD
    trees, rejections = generate_trees(cfg)
    results = []
    unexpected = []
    for index, tree in enumerate(trees):
        for fn in functions:
            rf = ResponsibilityFunction(fn, aggregator)
            reports = {
                "CC": check_cc(tree, rf),
                "NUR": check_nur(tree, rf),
                "NRV": check_nrv(tree, rf, individual=False),
                "NIRV": check_nrv(tree, rf, individual=True),
            }
            for axiom, report in reports.items():
                if not report.violated:
                    continue
                entry = {"tree_index": index, "function": fn.name,
                         "tree": tree.to_description(), **report.to_dict()}
                results.append(entry)
                if OUTCOME_MATRIX.get(fn.name, {}).get(axiom) is True:
                    unexpected.append(entry)
    return {"config": asdict(cfg), "trees": len(trees),
            "rejections": rejections, "violations": results,
            "unexpected": unexpected}


def _count_clamped(trees, functions):
    """Raw contribution values outside [0,1] observed while sweeping every
    (function, singleton group, node, action); empirical witnesses for the
    open question whether the raw quantities can escape the codomain."""
    clamped = 0
    for tree in trees:
        for fn in functions:
            for node in tree.decision_nodes:
                owner = tree.owner(node)
                for action in tree.actions(node):
                    value = fn(tree, frozenset([owner]), owner, node, action)
                    if value.clamped:
                        clamped += 1
    return clamped
