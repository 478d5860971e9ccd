"""Executable axiom checkers producing witnessed verdicts.

Member-level checkers audit a contribution function on one tree; outcome
checkers audit a composed responsibility function. A report whose premise
never fired has instances == 0, distinguishable from a genuinely exercised
pass. Every violated report carries a witness that re-checks.
"""

import itertools
from dataclasses import dataclass

from . import config
from .engine import (
    enumerate_strategies,
    iter_effective_resolutions,
    _CapCounter,
    reachable_outcomes,
    Scenario,
    scenario_actuals,
)
from .errors import ExplosionGuard
from .model import AMBIGUITY, DECISION, PROBABILITY, validate

KSYM = "KSym"
AMC = "AMC"
AMC_INFO = "AMCSim"
FMC = "FMC"
FMC_INFO = "FMCSim"
CC = "CC"
NUR = "NUR"
NRV = "NRV"
NIRV = "NIRV"

GROUP_ENUM_LIMIT = 12


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    verdict: str                 # "satisfied" | "violated"
    instances: int               # premise instances actually exercised
    witness: dict | None = None
    detail: str = ""

    @property
    def violated(self):
        return self.verdict == "violated"

    @property
    def vacuous(self):
        return self.verdict == "satisfied" and self.instances == 0

    def to_dict(self):
        out = {"axiom": self.axiom, "verdict": self.verdict,
               "instances": self.instances}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def _satisfied(axiom, instances, detail=""):
    return AxiomReport(axiom, "satisfied", instances, None, detail)


def _violated(axiom, instances, witness, detail=""):
    return AxiomReport(axiom, "violated", instances, witness, detail)


# -- member-level axioms -----------------------------------------------------


def check_ksym(tree, contribution, group):
    """Same action in the same information set must score the same."""
    group = tree.check_group(group)
    instances = 0
    for cls in tree.info_classes:
        owner = tree.owner(cls[0])
        if owner not in group:
            continue
        for action in sorted(tree.actions(cls[0])):
            instances += 1
            values = [contribution(tree, group, owner, v, action).value
                      for v in cls]
            spread = max(values) - min(values)
            if spread > config.EPS:
                return _violated(KSYM, instances, {
                    "nodes": list(cls), "action": action, "values": values,
                    "group": sorted(group),
                })
    return _satisfied(KSYM, instances)


def _branch_outcomes(tree, node):
    return [n for n in tree.branch(node) if tree.is_outcome(n)]


def _all_desirable(tree, nodes_iter):
    bad = tree.undesirable
    return all(n not in bad for n in nodes_iter)


def _all_undesirable(tree, nodes_iter):
    bad = tree.undesirable
    return all(n in bad for n in nodes_iter)


def _sure_premise_nodes(tree, group, sure, other, info, min_actions):
    """Yield (owner, node, action) where choosing `action` certainly leads
    to a `sure` outcome while every alternative certainly leads to an
    `other` outcome; the info variant quantifies over the whole class."""
    for node in tree.decision_nodes:
        owner = tree.owner(node)
        if owner not in group:
            continue
        actions = tree.actions(node)
        if len(actions) < min_actions:
            continue
        siblings = tree.info_class(node) if info else (node,)
        for action in actions:
            chosen = itertools.chain.from_iterable(
                _branch_outcomes(tree, tree.child(s, action)) for s in siblings)
            if not sure(tree, chosen):
                continue
            rest = itertools.chain.from_iterable(
                _branch_outcomes(tree, tree.child(s, b))
                for s in siblings for b in actions if b != action)
            if not other(tree, rest):
                continue
            yield owner, node, action


def check_amc(tree, contribution, group, info=False):
    """Avoidance of member contribution: surely avoiding ε while every
    alternative surely hits it must score 0."""
    group = tree.check_group(group)
    axiom = AMC_INFO if info else AMC
    instances = 0
    for owner, node, action in _sure_premise_nodes(
            tree, group, _all_desirable, _all_undesirable, info, 1):
        instances += 1
        got = contribution(tree, group, owner, node, action).value
        if abs(got) > config.EPS:
            return _violated(axiom, instances, {
                "node": node, "action": action, "value": got,
                "group": sorted(group), "required": 0.0,
            })
    return _satisfied(axiom, instances)


def check_fmc(tree, contribution, group, info=False):
    """Full member contribution: surely causing ε while every alternative
    surely avoids it must score 1 (only where a real choice exists)."""
    group = tree.check_group(group)
    axiom = FMC_INFO if info else FMC
    instances = 0
    for owner, node, action in _sure_premise_nodes(
            tree, group, _all_undesirable, _all_desirable, info, 2):
        instances += 1
        got = contribution(tree, group, owner, node, action).value
        if abs(got - 1.0) > config.EPS:
            return _violated(axiom, instances, {
                "node": node, "action": action, "value": got,
                "group": sorted(group), "required": 1.0,
            })
    return _satisfied(axiom, instances)


MEMBER_CHECKS = {
    KSYM: lambda tree, r, group: check_ksym(tree, r, group),
    AMC: lambda tree, r, group: check_amc(tree, r, group, info=False),
    AMC_INFO: lambda tree, r, group: check_amc(tree, r, group, info=True),
    FMC: lambda tree, r, group: check_fmc(tree, r, group, info=False),
    FMC_INFO: lambda tree, r, group: check_fmc(tree, r, group, info=True),
}


# -- outcome-level axioms ------------------------------------------------------


def _nonempty_groups(tree):
    agents = tree.agents
    if len(agents) > GROUP_ENUM_LIMIT:
        raise ExplosionGuard(2 ** len(agents) - 1, 2 ** GROUP_ENUM_LIMIT,
                             "groups")
    for size in range(1, len(agents) + 1):
        for combo in itertools.combinations(agents, size):
            yield frozenset(combo)


def check_cc(tree, responsibility):
    """Complete control: a desirable outcome reached through one agent's
    decisions alone carries no responsibility for that agent."""
    bad = tree.undesirable
    instances = 0
    for leaf in tree.leaves:
        if leaf in bad:
            continue
        hist = tree.history(leaf)
        if not hist:
            continue
        owners = {tree.kinds[n].owner for n in hist
                  if tree.kinds[n].kind == DECISION}
        if len(owners) != 1 or any(
                tree.kinds[n].kind != DECISION for n in hist):
            continue
        agent = owners.pop()
        instances += 1
        got = responsibility(tree, frozenset([agent]), leaf)
        if abs(got) > config.EPS:
            return _violated(CC, instances, {
                "outcome": leaf, "agent": agent, "value": got,
            })
    return _satisfied(CC, instances)


def _responsibility_cache(tree, responsibility, group):
    cache = {}

    def get(leaf):
        if leaf not in cache:
            cache[leaf] = responsibility(tree, group, leaf)
        return cache[leaf]

    return get


def check_nur(tree, responsibility, groups=None):
    """No unavoidable responsibility: every group must have a strategy and a
    compatible scenario under which every positive-probability outcome
    carries zero responsibility."""
    if groups is None:
        groups = list(_nonempty_groups(tree))
    failing = []
    instances = 0
    for group in groups:
        instances += 1
        value_at = _responsibility_cache(tree, responsibility, group)
        group_minus = tree.group_nodes(group)[1]
        avoided = False
        for strategy in enumerate_strategies(tree, group, tree.root):
            for actual in scenario_actuals(tree, group, tree.root):
                counter = _CapCounter("scenarios")
                for resolution in iter_effective_resolutions(
                        tree, group_minus, actual, counter):
                    scenario = Scenario(group=group, anchor=tree.root,
                                        actual=actual, resolution=resolution)
                    outcomes = reachable_outcomes(tree, group, strategy, scenario)
                    if all(abs(value_at(w)) <= config.EPS for w in outcomes):
                        avoided = True
                        break
                if avoided:
                    break
            if avoided:
                break
        if not avoided:
            failing.append(sorted(group))
    if failing:
        return _violated(NUR, instances, {"groups": failing})
    return _satisfied(NUR, instances)


def _uncertainty_nodes(tree):
    return [n for n in tree.node_order
            if tree.kinds[n].kind in (AMBIGUITY, PROBABILITY)]


def check_nrv(tree, responsibility, individual=False):
    """No (individual) responsibility voids: on an uncertainty-free tree
    with ε a proper subset of the outcomes, every undesirable outcome must
    leave some group (some single agent) positively responsible."""
    axiom = NIRV if individual else NRV
    bad = tree.undesirable
    if _uncertainty_nodes(tree) or not bad or bad == frozenset(tree.leaves):
        return _satisfied(axiom, 0, detail="premise not met; vacuous")
    if individual:
        groups = [frozenset([a]) for a in tree.agents]
    else:
        groups = list(_nonempty_groups(tree))
    instances = 0
    for leaf in tree.leaves:
        if leaf not in bad:
            continue
        instances += 1
        scores = {tuple(sorted(g)): responsibility(tree, g, leaf)
                  for g in groups}
        if not any(v > config.EPS for v in scores.values()):
            return _violated(axiom, instances, {
                "outcome": leaf,
                "scores": {",".join(g): v for g, v in sorted(scores.items())},
            })
    return _satisfied(axiom, instances)


ENV_AGENT = "env"


def fixed_root_reductions(tree):
    """For a tree whose only uncertainty is a root ambiguity node: the same
    structure with the root handed to a fresh environment agent (the
    information partition survives, unlike pruning a subtree), paired per
    root child with the undesirable outcomes inside that child's branch."""
    if tree.kinds[tree.root].kind != AMBIGUITY:
        return []
    if len(_uncertainty_nodes(tree)) != 1:
        return []
    env = ENV_AGENT
    while env in tree.agents:
        env = "_" + env
    description = tree.to_description()
    description["agents"] = list(tree.agents) + [env]
    description["nodes"][tree.root] = {"kind": DECISION, "owner": env}
    reduced = validate(description)
    out = []
    for edge in tree.edges_from(tree.root):
        fixed_outcomes = frozenset(
            n for n in tree.branch(edge.child) if n in tree.undesirable)
        out.append((edge.child, reduced, fixed_outcomes))
    return out


def check_nrv_fixed_root(tree, responsibility, individual=False):
    """Run the void check once per fixed root branch of the reduction,
    restricted to the undesirable outcomes that branch can still reach.
    Returns a list of (root_child, AxiomReport)."""
    axiom = NIRV if individual else NRV
    reports = []
    for child, reduced, fixed_outcomes in fixed_root_reductions(tree):
        if individual:
            groups = [frozenset([a]) for a in reduced.agents]
        else:
            groups = list(_nonempty_groups(reduced))
        report = _satisfied(axiom, 0, detail=f"root fixed to {child}")
        instances = 0
        for leaf in reduced.leaves:
            if leaf not in fixed_outcomes:
                continue
            instances += 1
            scores = {tuple(sorted(g)): responsibility(reduced, g, leaf)
                      for g in groups}
            if not any(v > config.EPS for v in scores.values()):
                report = _violated(axiom, instances, {
                    "outcome": leaf, "root_child": child,
                    "scores": {",".join(g): v for g, v in sorted(scores.items())},
                }, detail=f"root fixed to {child}")
                break
        else:
            report = _satisfied(axiom, instances, detail=f"root fixed to {child}")
        reports.append((child, report))
    return reports
